"""Directional space-inversion (mirror) operators on the spin-l space.

The cardinal mirrors are exact signed (anti-)diagonal matrices:

    (P_x)_{m,n} = delta_{m,-n}
    (P_y)_{m,n} = (-1)^m delta_{m,-n}
    (P_z)_{m,n} = (-1)^{l+m} delta_{m,n}

and the mirror along an arbitrary direction (theta, phi) is P_x conjugated
by the rotation that carries the +x axis onto that direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rotation import RotationSpec, exp_rotation
from .su2 import AngularBasis, OperatorMatrix, _check_m

INVOLUTION_TOL = 1e-12


@dataclass(frozen=True)
class MirrorOperator:
    """Involutive unitary reflection; direction is an axis label or a
    (theta, phi) pair in radians."""

    basis: AngularBasis
    matrix: OperatorMatrix
    direction: object

    def __post_init__(self):
        entries = self.matrix.entries
        defect = np.abs(entries @ entries - np.eye(self.basis.dimension)).max()
        if defect >= INVOLUTION_TOL:
            raise ValueError(f"mirror is not involutive, defect {defect:.3e}")

    def apply(self, state):
        return self.matrix.apply(state)


@dataclass(frozen=True)
class ParityPhase:
    """Scalar acquired by |l,m> under a cardinal mirror, and whether the
    mirror sends m to -m."""

    l: int
    m: int
    axis: str
    phase: complex
    flips_m: bool


def mirror_x(basis: AngularBasis) -> MirrorOperator:
    """Mirror along x: maps |l,m> to |l,-m>."""
    entries = np.fliplr(np.eye(basis.dimension, dtype=np.complex128))
    matrix = OperatorMatrix(basis, entries, hermitian=True, unitary=True, real=True)
    return MirrorOperator(basis, matrix, "x")


def mirror_y(basis: AngularBasis) -> MirrorOperator:
    """Mirror along y: maps |l,m> to (-1)^m |l,-m>."""
    n = basis.dimension
    entries = np.zeros((n, n), dtype=np.complex128)
    for i, m_row in enumerate(basis.m_values):
        entries[i, n - 1 - i] = (-1.0) ** m_row
    matrix = OperatorMatrix(basis, entries, hermitian=True, unitary=True, real=True)
    return MirrorOperator(basis, matrix, "y")


def mirror_z(basis: AngularBasis) -> MirrorOperator:
    """Mirror along z: multiplies |l,m> by (-1)^(l+m)."""
    signs = (-1.0) ** (basis.l + basis.m_values)
    matrix = OperatorMatrix(
        basis,
        np.diag(signs.astype(np.complex128)),
        hermitian=True,
        unitary=True,
        real=True,
    )
    return MirrorOperator(basis, matrix, "z")


def mirror_general(basis: AngularBasis, theta: float, phi: float) -> MirrorOperator:
    """Mirror along the (theta, phi) direction, built by rotating that
    direction onto +x, applying P_x, and rotating back:

        P(theta, phi) = Rz(phi) Ry(theta - pi/2) P_x Ry(pi/2 - theta) Rz(-phi)

    Reduces to P_x at (pi/2, 0), P_y at (pi/2, pi/2) and P_z at (0, any phi).
    """
    for name, value in (("theta", theta), ("phi", phi)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")
    tilt = math.pi / 2.0 - theta
    rz = exp_rotation(basis, RotationSpec("z", phi)).matrix.entries
    ry = exp_rotation(basis, RotationSpec("y", -tilt)).matrix.entries
    px = mirror_x(basis).matrix.entries
    entries = rz @ ry @ px @ ry.conj().T @ rz.conj().T
    matrix = OperatorMatrix(basis, entries, hermitian=True, unitary=True)
    return MirrorOperator(basis, matrix, (float(theta), float(phi)))


def parity_phase(l: int, m: int, axis: str) -> ParityPhase:
    """Phase law of the cardinal mirrors on |l,m>: +1 for x, (-1)^m for y
    (both flip m), (-1)^(l+m) for z (m kept)."""
    m = _check_m(l, m)
    if axis == "x":
        return ParityPhase(l, m, axis, 1.0 + 0.0j, flips_m=True)
    if axis == "y":
        return ParityPhase(l, m, axis, complex((-1.0) ** m), flips_m=True)
    if axis == "z":
        return ParityPhase(l, m, axis, complex((-1.0) ** (l + m)), flips_m=False)
    raise ValueError(f"axis must be one of ('x', 'y', 'z'), got {axis!r}")


def conjugate_operator(mirror: MirrorOperator, op: OperatorMatrix) -> OperatorMatrix:
    """Conjugation P L P^{-1}; the mirror's inverse is its adjoint."""
    if mirror.basis != op.basis:
        raise ValueError("mirror and operator bases do not match")
    p = mirror.matrix.entries
    entries = p @ op.entries @ p.conj().T
    return OperatorMatrix(
        mirror.basis, entries, hermitian=op.hermitian, unitary=op.unitary
    )


def conjugation_sign(
    mirror: MirrorOperator, op: OperatorMatrix, tol: float = 1e-11
) -> int | None:
    """Which sign relation P L P^{-1} = +-L the conjugation satisfies, or
    None when it is neither (e.g. for ladder operators, which swap)."""
    conjugated = conjugate_operator(mirror, op).entries
    if np.abs(conjugated - op.entries).max() < tol:
        return 1
    if np.abs(conjugated + op.entries).max() < tol:
        return -1
    return None
