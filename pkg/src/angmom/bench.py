"""Timing surface for the rotation-exponential and grid-evaluation kernels.

Two comparisons are reported as (l, method, wall_time_s, max_defect) rows:

* expm_eig vs expm_taylor: eigendecomposition-based exponential against a
  Taylor series truncated at the machine-precision term. The defect is the
  unitarity defect max|U^dagger U - I| of the produced matrix.
* grid_python vs grid_ext: the numpy and compiled grid-evaluation kernels
  on one mesh-sized grid. The python row is the reference (defect 0); the
  ext row's defect is its max deviation from the reference. The ext row is
  present only when the compiled kernel is built.
"""

from __future__ import annotations

import math
import time

import numpy as np

from . import _gridkernel_py
from .rotation import RotationSpec, axis_decomposition, exp_rotation
from .su2 import AngularBasis, l_y, state
from .wavefield import pole_amplitude

try:
    from . import _gridkernel
except ImportError:
    _gridkernel = None

BENCH_ANGLE = 0.7368  # fixed arbitrary angle, nothing special about it
GRID_SHAPE = (64, 128)
_TAYLOR_MAX_TERMS = 20000


def taylor_expm(generator: np.ndarray, angle: float) -> np.ndarray:
    """exp(-i * generator * angle) by summing the Taylor series until the
    next term falls below machine precision relative to the running sum."""
    n = generator.shape[0]
    step = -1j * angle * generator
    total = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for order in range(1, _TAYLOR_MAX_TERMS):
        term = term @ step / order
        total = total + term
        if np.abs(term).max() <= 1e-16 * max(1.0, np.abs(total).max()):
            break
    else:
        raise RuntimeError("Taylor series failed to terminate")
    return total


def unitary_defect(matrix: np.ndarray) -> float:
    n = matrix.shape[0]
    return float(np.abs(matrix.conj().T @ matrix - np.eye(n)).max())


def _time(func, reps: int) -> float:
    func()  # warm-up (fills caches, triggers any lazy compilation)
    start = time.perf_counter()
    for _ in range(reps):
        func()
    return (time.perf_counter() - start) / reps


def bench_expm(l: int, reps: int) -> list[tuple[int, str, float, float]]:
    basis = AngularBasis(l)
    spec = RotationSpec("y", BENCH_ANGLE)
    generator = l_y(basis).entries

    eig_seconds = _time(lambda: exp_rotation(basis, spec), reps)
    eig_defect = unitary_defect(exp_rotation(basis, spec).matrix.entries)

    taylor_seconds = _time(lambda: taylor_expm(generator, BENCH_ANGLE), reps)
    taylor_defect = unitary_defect(taylor_expm(generator, BENCH_ANGLE))

    return [
        (l, "expm_eig", eig_seconds, eig_defect),
        (l, "expm_taylor", taylor_seconds, taylor_defect),
    ]


def bench_grid(l: int, reps: int) -> list[tuple[int, str, float, float]]:
    basis = AngularBasis(l)
    probe = state(basis, 0)
    eigvals, eigvecs = axis_decomposition(basis, "y")
    pole_row = np.conj(eigvecs[basis.index_of(0)])
    m_values = basis.m_values.astype(np.float64)
    scale = pole_amplitude(l)
    n_theta, n_phi = GRID_SHAPE
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = 2.0 * math.pi * np.arange(n_phi) / n_phi
    args = (eigvecs, eigvals, pole_row, probe.amplitudes, m_values, scale,
            thetas, phis)

    reference = _gridkernel_py.grid_amplitudes(*args)
    rows = [(l, "grid_python",
             _time(lambda: _gridkernel_py.grid_amplitudes(*args), reps), 0.0)]
    if _gridkernel is not None:
        deviation = float(np.abs(_gridkernel.grid_amplitudes(*args) - reference).max())
        rows.append((l, "grid_ext",
                     _time(lambda: _gridkernel.grid_amplitudes(*args), reps),
                     deviation))
    return rows


def run_bench(ls, reps: int) -> list[tuple[int, str, float, float]]:
    if reps < 1:
        raise ValueError(f"reps must be at least 1, got {reps}")
    rows = []
    for l in ls:
        rows.extend(bench_expm(l, reps))
        rows.extend(bench_grid(l, reps))
    return rows
