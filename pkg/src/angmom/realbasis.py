"""Real combinations of the |l,m> states (real spherical harmonics).

For m > 0 the cosine-type and sine-type combinations are

    ((-1)^m |l,m> + |l,-m>) / sqrt(2)
    ((-1)^m |l,m> - |l,-m>) / (i sqrt(2))

and m = 0 maps to itself. The (-1)^m factors embed the Condon-Shortley
convention, so every combination evaluates to a real function on the
sphere. The familiar Cartesian names (x, y, z, xy, ...) are defined for
l <= 2; higher l uses generic "l,m,cos" / "l,m,sin" labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .su2 import AngularBasis, OperatorMatrix, StateVector

_CARTESIAN_LABELS = {
    0: ("s",),
    1: ("x", "z", "y"),
    2: ("x2-y2", "xz", "z2", "yz", "xy"),
}


@dataclass(frozen=True)
class RealBasisTransform:
    """Unitary map from complex-basis amplitudes to real-basis amplitudes.

    Row r of the matrix is the bra of the r-th real basis vector; rows are
    ordered cosine-type (m = l..1), then m = 0, then sine-type (m = 1..l),
    mirroring the complex basis layout.
    """

    basis: AngularBasis
    matrix: OperatorMatrix
    labels: tuple[str, ...]

    def to_real(self, state: StateVector) -> np.ndarray:
        if state.basis != self.basis:
            raise ValueError("state basis does not match transform basis")
        return self.matrix.entries @ state.amplitudes

    def from_real(self, coefficients) -> StateVector:
        coefficients = np.asarray(coefficients, dtype=np.complex128)
        return StateVector(self.basis, self.matrix.entries.conj().T @ coefficients)

    def basis_state(self, label: str) -> StateVector:
        """The real basis vector with the given label, as a complex-basis ket."""
        if label not in self.labels:
            raise ValueError(
                f"unknown state name {label!r} for l={self.basis.l}; "
                f"valid names: {', '.join(self.labels)}"
            )
        row = self.labels.index(label)
        return StateVector(self.basis, self.matrix.entries[row].conj())


@dataclass(frozen=True)
class NamedState:
    """A labelled unit-norm state, e.g. (1, "z") or (2, "xy")."""

    l: int
    name: str
    vector: StateVector


def _labels(l: int) -> tuple[str, ...]:
    if l in _CARTESIAN_LABELS:
        return _CARTESIAN_LABELS[l]
    cos_part = tuple(f"{l},{m},cos" for m in range(l, 0, -1))
    sin_part = tuple(f"{l},{m},sin" for m in range(1, l + 1))
    return cos_part + (f"{l},0",) + sin_part


def real_transform(basis: AngularBasis) -> RealBasisTransform:
    """The real-basis change of basis for the given l."""
    l = basis.l
    n = basis.dimension
    mat = np.zeros((n, n), dtype=np.complex128)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    mat[l, l] = 1.0
    for m in range(1, l + 1):
        sign = (-1.0) ** m
        i_pos, i_neg = basis.index_of(m), basis.index_of(-m)
        cos_row, sin_row = l - m, l + m
        # Bra rows: conjugates of the kets defined in the module docstring.
        mat[cos_row, i_pos] = sign * inv_sqrt2
        mat[cos_row, i_neg] = inv_sqrt2
        mat[sin_row, i_pos] = 1j * sign * inv_sqrt2
        mat[sin_row, i_neg] = -1j * inv_sqrt2
    matrix = OperatorMatrix(basis, mat, unitary=True)
    return RealBasisTransform(basis, matrix, _labels(l))


def named_state(l: int, name: str) -> NamedState:
    """Named real-basis state; raises listing the valid names for that l."""
    transform = real_transform(AngularBasis(l))
    return NamedState(l, name, transform.basis_state(name))
