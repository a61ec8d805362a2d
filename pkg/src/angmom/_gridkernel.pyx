# cython: boundscheck=False, wraparound=False, cdivision=True
# Compiled grid-evaluation kernel. Must stay numerically interchangeable
# with _gridkernel_py.grid_amplitudes (same contract, same argument order).
# The phi accumulation runs on separate real/imag planes so the C compiler
# can vectorize it.
import numpy as np

from libc.math cimport cos, sin


def grid_amplitudes(const double complex[:, ::1] eigvecs, const double[::1] eigvals,
                    const double complex[::1] pole_row, const double complex[::1] amplitudes,
                    const double[::1] m_values, double scale,
                    const double[::1] thetas, const double[::1] phis):
    cdef Py_ssize_t dim = eigvals.shape[0]
    cdef Py_ssize_t n_theta = thetas.shape[0]
    cdef Py_ssize_t n_phi = phis.shape[0]

    out_re_arr = np.zeros((n_theta, n_phi), dtype=np.float64)
    out_im_arr = np.zeros((n_theta, n_phi), dtype=np.float64)
    cdef double[:, ::1] out_re = out_re_arr
    cdef double[:, ::1] out_im = out_im_arr
    tmp_arr = np.empty(dim, dtype=np.complex128)
    cdef double complex[::1] tmp = tmp_arr
    # exp(i m_j phi_c) split into real/imag planes; theta-independent.
    azim_re_arr = np.empty((dim, n_phi), dtype=np.float64)
    azim_im_arr = np.empty((dim, n_phi), dtype=np.float64)
    cdef double[:, ::1] azim_re = azim_re_arr
    cdef double[:, ::1] azim_im = azim_im_arr

    cdef Py_ssize_t r, c, j, k
    cdef double angle, w_re, w_im
    cdef double complex probe, weighted

    for j in range(dim):
        for c in range(n_phi):
            angle = m_values[j] * phis[c]
            azim_re[j, c] = cos(angle)
            azim_im[j, c] = sin(angle)

    for r in range(n_theta):
        for k in range(dim):
            angle = -eigvals[k] * thetas[r]
            tmp[k] = (cos(angle) + 1j * sin(angle)) * pole_row[k]
        for j in range(dim):
            probe = 0
            for k in range(dim):
                probe = probe + eigvecs[j, k] * tmp[k]
            weighted = probe * amplitudes[j] * scale
            w_re = weighted.real
            w_im = weighted.imag
            for c in range(n_phi):
                out_re[r, c] += w_re * azim_re[j, c] - w_im * azim_im[j, c]
                out_im[r, c] += w_re * azim_im[j, c] + w_im * azim_re[j, c]

    out_arr = np.empty((n_theta, n_phi), dtype=np.complex128)
    out_arr.real = out_re_arr
    out_arr.imag = out_im_arr
    return out_arr
