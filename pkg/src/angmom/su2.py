"""Matrix representation of the angular-momentum algebra on the spin-l space.

Basis states are ordered by descending magnetic quantum number, so index i
holds m = l - i and index 0 is the highest-weight state. Every matrix built
here inherits that ordering. hbar = 1 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Ceiling on l: keeps the sqrt/lgamma paths well inside double range and
# bounds the dense (2l+1)^2 storage.
L_MAX = 512

HERMITIAN_TOL = 1e-13
UNITARY_TOL = 1e-12
REAL_TOL = 1e-13


@dataclass(frozen=True)
class AngularBasis:
    """Ordered |l,m> basis with m descending: index i corresponds to m = l - i."""

    l: int

    def __post_init__(self):
        if isinstance(self.l, bool) or not isinstance(self.l, (int, np.integer)):
            raise ValueError(f"l must be a non-negative integer, got {self.l!r}")
        if self.l < 0:
            raise ValueError(f"l must be non-negative, got {self.l}")
        if self.l > L_MAX:
            raise ValueError(f"l={self.l} exceeds the supported ceiling {L_MAX}")
        object.__setattr__(self, "l", int(self.l))

    @property
    def dimension(self) -> int:
        return 2 * self.l + 1

    @property
    def m_values(self) -> np.ndarray:
        """Magnetic quantum numbers in storage order, l down to -l."""
        return np.arange(self.l, -self.l - 1, -1)

    def index_of(self, m: int) -> int:
        """Storage index of |l,m>; domain error outside -l..l."""
        m = _check_m(self.l, m)
        return self.l - m


def build_basis(l: int) -> AngularBasis:
    """Basis of the (2l+1)-dimensional spin-l space."""
    return AngularBasis(l)


def _check_m(l: int, m) -> int:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise ValueError(f"m must be an integer, got {m!r}")
    if abs(m) > l:
        raise ValueError(f"m={m} outside the allowed range -{l}..{l}")
    return int(m)


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense complex matrix on an AngularBasis with structural flags.

    Flags are promises verified numerically at construction: hermitian to
    1e-13, unitary to 1e-12, real-valued entries to 1e-13 (all max-norm).
    Entries are frozen after construction.
    """

    basis: AngularBasis
    entries: np.ndarray
    hermitian: bool = False
    unitary: bool = False
    real: bool = False

    def __post_init__(self):
        n = self.basis.dimension
        entries = np.ascontiguousarray(self.entries, dtype=np.complex128)
        if entries.shape != (n, n):
            raise ValueError(
                f"entries shape {entries.shape} does not match basis dimension {n}"
            )
        if not np.all(np.isfinite(entries.view(np.float64))):
            raise ValueError("matrix entries must be finite")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)
        if self.hermitian:
            defect = np.abs(entries - entries.conj().T).max()
            if defect >= HERMITIAN_TOL:
                raise ValueError(f"hermitian flag violated, defect {defect:.3e}")
        if self.unitary:
            defect = np.abs(entries.conj().T @ entries - np.eye(n)).max()
            if defect >= UNITARY_TOL:
                raise ValueError(f"unitary flag violated, defect {defect:.3e}")
        if self.real:
            defect = np.abs(entries.imag).max()
            if defect >= REAL_TOL:
                raise ValueError(f"real flag violated, defect {defect:.3e}")

    def apply(self, state: StateVector) -> StateVector:
        if state.basis != self.basis:
            raise ValueError("state basis does not match operator basis")
        return StateVector(self.basis, self.entries @ state.amplitudes)

    def dagger(self) -> OperatorMatrix:
        return OperatorMatrix(
            self.basis,
            self.entries.conj().T,
            hermitian=self.hermitian,
            unitary=self.unitary,
            real=self.real,
        )


@dataclass(frozen=True)
class StateVector:
    """Complex amplitudes over an AngularBasis, in m-descending order."""

    basis: AngularBasis
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.basis.dimension,):
            raise ValueError(
                f"amplitude count {amps.shape} does not match dimension "
                f"{self.basis.dimension}"
            )
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def state(basis: AngularBasis, m: int) -> StateVector:
    """Unit eigenstate |l,m> of l_z."""
    amps = np.zeros(basis.dimension, dtype=np.complex128)
    amps[basis.index_of(m)] = 1.0
    return StateVector(basis, amps)


def ladder_plus(basis: AngularBasis) -> OperatorMatrix:
    """Raising operator: <l,m+1|L_+|l,m> = sqrt((l-m)(l+m+1)), one superdiagonal."""
    l = basis.l
    m = basis.m_values[1:].astype(np.float64)  # columns that can be raised
    return OperatorMatrix(
        basis, np.diag(np.sqrt((l - m) * (l + m + 1.0)), k=1), real=True
    )


def ladder_minus(basis: AngularBasis) -> OperatorMatrix:
    """Lowering operator: <l,m-1|L_-|l,m> = sqrt((l+m)(l-m+1)), one subdiagonal."""
    l = basis.l
    m = basis.m_values[:-1].astype(np.float64)  # columns that can be lowered
    return OperatorMatrix(
        basis, np.diag(np.sqrt((l + m) * (l - m + 1.0)), k=-1), real=True
    )


def l_x(basis: AngularBasis) -> OperatorMatrix:
    """L_x = (L_+ + L_-)/2, real symmetric."""
    lp = ladder_plus(basis).entries
    return OperatorMatrix(basis, (lp + lp.conj().T) / 2.0, hermitian=True, real=True)


def l_y(basis: AngularBasis) -> OperatorMatrix:
    """L_y = (L_+ - L_-)/(2i), Hermitian with purely imaginary entries."""
    lp = ladder_plus(basis).entries
    return OperatorMatrix(basis, (lp - lp.conj().T) / 2.0j, hermitian=True)


def l_z(basis: AngularBasis) -> OperatorMatrix:
    """L_z, diagonal with entries m in descending order."""
    return OperatorMatrix(
        basis,
        np.diag(basis.m_values.astype(np.complex128)),
        hermitian=True,
        real=True,
    )


def casimir(basis: AngularBasis) -> OperatorMatrix:
    """Total angular momentum L^2, assembled from the ladder identity
    L^2 = L_- L_+ + L_z (1 + L_z); equals l(l+1) times the identity."""
    lp = ladder_plus(basis).entries
    lm = ladder_minus(basis).entries
    lz = l_z(basis).entries
    eye = np.eye(basis.dimension, dtype=np.complex128)
    return OperatorMatrix(
        basis, lm @ lp + lz @ (eye + lz), hermitian=True, real=True
    )


def lowering_coefficient(l: int, m_abs: int) -> float:
    """Normalization C(l,|m|) = sqrt((l-|m|)! / (l+|m|)!) linking |l,0> to
    |l,+-|m|> through |m| ladder applications.

    Evaluated through lgamma so large l stays finite; C(l,0) is exactly 1.
    """
    if isinstance(m_abs, bool) or not isinstance(m_abs, (int, np.integer)):
        raise ValueError(f"|m| must be an integer, got {m_abs!r}")
    if m_abs < 0 or m_abs > l:
        raise ValueError(f"|m|={m_abs} outside the allowed range 0..{l}")
    return math.exp(0.5 * (math.lgamma(l - m_abs + 1) - math.lgamma(l + m_abs + 1)))
