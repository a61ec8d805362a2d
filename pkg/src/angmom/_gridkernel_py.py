"""Pure-numpy grid-evaluation kernel (fallback for the compiled one).

Both backends compute, for every grid point (theta_r, phi_c),

    out[r, c] = scale * sum_j exp(i m_j phi_c) * d_j(theta_r) * psi_j

where d(theta) = V diag(exp(-i lam theta)) V^dagger restricted to the
probe column, supplied through pole_row = conj(V[probe_index, :]).
"""

from __future__ import annotations

import numpy as np


def grid_amplitudes(eigvecs, eigvals, pole_row, amplitudes, m_values, scale,
                    thetas, phis):
    phase = np.exp(-1j * np.outer(thetas, eigvals))  # (n_theta, dim)
    probe_columns = (phase * pole_row) @ eigvecs.T  # (n_theta, dim)
    weighted = probe_columns * (amplitudes * scale)
    return weighted @ np.exp(1j * np.outer(m_values, phis))
