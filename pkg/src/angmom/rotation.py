"""Rotation operators exp(-i L_k phi) on the spin-l space.

Single-axis rotations are computed from the eigendecomposition of the
Hermitian generator, which keeps them unitary to rounding at any angle and
makes repeat angles cheap (the decomposition is cached per axis and l).
z-axis rotations short-circuit to the analytic diagonal. The degree-1 and
degree-2 matrices also have exact trigonometric closed forms, kept here as
reference tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .su2 import AngularBasis, OperatorMatrix, l_x, l_y

AXES = ("x", "y", "z")

# (l, axis) -> (eigenvalues, eigenvectors) of the generator. Concurrent
# callers may race to insert; both compute identical values so either wins.
_DECOMPOSITIONS: dict[tuple[int, str], tuple[np.ndarray, np.ndarray]] = {}


@dataclass(frozen=True)
class RotationSpec:
    """Axis label (x, y or z) and angle in radians."""

    axis: str
    angle: float

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}, got {self.axis!r}")
        if not math.isfinite(self.angle):
            raise ValueError(f"angle must be finite, got {self.angle!r}")
        object.__setattr__(self, "angle", float(self.angle))


@dataclass(frozen=True)
class RotationOperator:
    """Unitary rotation matrix together with the spec that generated it."""

    basis: AngularBasis
    matrix: OperatorMatrix
    spec: object  # RotationSpec or (alpha, beta, gamma) Euler triple

    def apply(self, state):
        return self.matrix.apply(state)


def axis_decomposition(basis: AngularBasis, axis: str) -> tuple[np.ndarray, np.ndarray]:
    """Cached eigendecomposition (eigenvalues, eigenvectors) of L_axis."""
    key = (basis.l, axis)
    hit = _DECOMPOSITIONS.get(key)
    if hit is not None:
        return hit
    if axis == "z":
        lam = basis.m_values.astype(np.float64)
        vec = np.eye(basis.dimension, dtype=np.complex128)
    else:
        generator = l_x(basis) if axis == "x" else l_y(basis)
        lam, vec = np.linalg.eigh(generator.entries)
        vec = np.ascontiguousarray(vec, dtype=np.complex128)
    lam.flags.writeable = False
    vec.flags.writeable = False
    _DECOMPOSITIONS[key] = (lam, vec)
    return lam, vec


def _exp_entries(basis: AngularBasis, axis: str, angle: float) -> np.ndarray:
    if axis == "z":
        return np.diag(np.exp(-1j * angle * basis.m_values))
    lam, vec = axis_decomposition(basis, axis)
    return (vec * np.exp(-1j * angle * lam)) @ vec.conj().T


def exp_rotation(basis: AngularBasis, spec: RotationSpec) -> RotationOperator:
    """Rotation exp(-i L_axis angle); y-axis results are real (Wigner-d)."""
    entries = _exp_entries(basis, spec.axis, spec.angle)
    matrix = OperatorMatrix(basis, entries, unitary=True, real=(spec.axis == "y"))
    return RotationOperator(basis, matrix, spec)


def rotation_zyz(
    basis: AngularBasis, alpha: float, beta: float, gamma: float
) -> RotationOperator:
    """Euler composition exp(-i L_z alpha) exp(-i L_y beta) exp(-i L_z gamma)."""
    for name, value in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")
    phase_a = np.exp(-1j * alpha * basis.m_values)
    phase_g = np.exp(-1j * gamma * basis.m_values)
    middle = _exp_entries(basis, "y", beta)
    entries = phase_a[:, None] * middle * phase_g[None, :]
    matrix = OperatorMatrix(basis, entries, unitary=True)
    return RotationOperator(basis, matrix, (float(alpha), float(beta), float(gamma)))


# Exact closed forms at l=1: each single-axis rotation is
# constant + (cosine matrix) cos(phi) + (sine matrix) sin(phi).

_L1_X_CONST = 0.5 * np.array([[1, 0, -1], [0, 0, 0], [-1, 0, 1]], dtype=np.complex128)
_L1_X_COS = 0.5 * np.array([[1, 0, 1], [0, 2, 0], [1, 0, 1]], dtype=np.complex128)
_L1_X_SIN = (-1j / math.sqrt(2)) * np.array(
    [[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=np.complex128
)

_L1_Y_CONST = 0.5 * np.array([[1, 0, 1], [0, 0, 0], [1, 0, 1]], dtype=np.complex128)
_L1_Y_COS = 0.5 * np.array([[1, 0, -1], [0, 2, 0], [-1, 0, 1]], dtype=np.complex128)
_L1_Y_SIN = (-1 / math.sqrt(2)) * np.array(
    [[0, 1, 0], [-1, 0, 1], [0, -1, 0]], dtype=np.complex128
)


def closed_form_l1(axis: str, angle: float) -> OperatorMatrix:
    """Exact three-term form of exp(-i L_axis angle) at l=1."""
    spec = RotationSpec(axis, angle)  # validates axis and angle
    basis = AngularBasis(1)
    c, s = math.cos(spec.angle), math.sin(spec.angle)
    if axis == "x":
        entries = _L1_X_CONST + _L1_X_COS * c + _L1_X_SIN * s
    elif axis == "y":
        entries = _L1_Y_CONST + _L1_Y_COS * c + _L1_Y_SIN * s
    else:
        entries = np.diag(np.exp(-1j * spec.angle * basis.m_values))
    return OperatorMatrix(basis, entries, unitary=True, real=(axis == "y"))


@dataclass(frozen=True)
class ClosedFormL2Coefficients:
    """The nine trigonometric coefficients of the degree-2 x/y rotation
    templates, in reading order of the symmetric 5x5 pattern (no i: it is
    reserved for the imaginary unit)."""

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float
    g: float
    h: float
    j: float


def closed_form_l2_coeffs(angle: float) -> ClosedFormL2Coefficients:
    """Coefficient values at the given angle; at 0 the templates collapse
    to the identity (a = f = j = 1, all others 0)."""
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    s6 = math.sqrt(6.0)
    c1, s1 = math.cos(angle), math.sin(angle)
    c2, s2 = math.cos(2 * angle), math.sin(2 * angle)
    return ClosedFormL2Coefficients(
        a=0.375 + 0.125 * c2 + 0.5 * c1,
        b=-0.5 * s1 - 0.25 * s2,
        c=(s6 / 8.0) * (c2 - 1.0),
        d=-0.25 * s2 + 0.5 * s1,
        e=0.375 + 0.125 * c2 - 0.5 * c1,
        f=0.5 * (c1 + c2),
        g=-(s6 / 4.0) * s2,
        h=0.5 * (c2 - c1),
        j=0.25 + 0.75 * c2,
    )


def closed_form_l2(axis: str, angle: float) -> OperatorMatrix:
    """Exact form of exp(-i L_axis angle) at l=2, assembled from the
    coefficient templates."""
    spec = RotationSpec(axis, angle)
    basis = AngularBasis(2)
    if axis == "z":
        return OperatorMatrix(
            basis,
            np.diag(np.exp(-1j * spec.angle * basis.m_values)),
            unitary=True,
        )
    k = closed_form_l2_coeffs(spec.angle)
    a, b, c, d, e, f, g, h, j = k.a, k.b, k.c, k.d, k.e, k.f, k.g, k.h, k.j
    if axis == "x":
        entries = np.array(
            [
                [a, 1j * b, c, 1j * d, e],
                [1j * b, f, 1j * g, h, 1j * d],
                [c, 1j * g, j, 1j * g, c],
                [1j * d, h, 1j * g, f, 1j * b],
                [e, 1j * d, c, 1j * b, a],
            ],
            dtype=np.complex128,
        )
        return OperatorMatrix(basis, entries, unitary=True)
    entries = np.array(
        [
            [a, b, -c, -d, e],
            [-b, f, g, -h, -d],
            [-c, -g, j, g, -c],
            [d, -h, -g, f, b],
            [e, d, -c, -b, a],
        ],
        dtype=np.complex128,
    )
    return OperatorMatrix(basis, entries, unitary=True, real=True)
