"""Wavefunctions on the sphere, evaluated purely algebraically.

The amplitude at (theta, phi) is read off by rotating the state so that the
probe direction lands on the north pole and taking the m = 0 component
there: with R(phi, theta) = exp(-i L_z phi) exp(-i L_y theta),

    Y(theta, phi) = N_l * (R(phi, theta)^dagger psi)[m = 0],

which works because the pole amplitude of every m != 0 state vanishes.
The overall scale N_l = sqrt((2l+1)/(4 pi)) is fixed by requiring unit
L2-norm over the sphere, so results line up with the orthonormal
harmonics from the legendre module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .rotation import axis_decomposition
from .su2 import AngularBasis, StateVector

TWO_PI = 2.0 * math.pi

# A state evaluates to a real function iff psi_m = (-1)^m conj(psi_{-m}).
_REAL_STATE_TOL = 1e-12
_AXISYMMETRY_TOL = 1e-10
_FIT_RESIDUAL_TOL = 1e-10
_COEFF_PRUNE_TOL = 1e-12


@dataclass(frozen=True)
class SphericalPoint:
    """Point (theta, phi) on the sphere; theta in [0, pi], phi stored
    wrapped into [0, 2 pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("theta and phi must be finite")
        if self.theta < 0.0 or self.theta > math.pi:
            raise ValueError(f"theta={self.theta} outside [0, pi]")
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", float(self.phi) % TWO_PI)


def pole_amplitude(l: int) -> float:
    """Value of the m = 0 state at the north pole, N_l = sqrt((2l+1)/(4 pi))."""
    if isinstance(l, bool) or not isinstance(l, (int, np.integer)):
        raise ValueError(f"l must be an integer, got {l!r}")
    if l < 0:
        raise ValueError(f"l must be non-negative, got {l}")
    return math.sqrt((2 * l + 1) / (4.0 * math.pi))


def _probe_inputs(state: StateVector):
    basis = state.basis
    eigvals, eigvecs = axis_decomposition(basis, "y")
    pole_row = np.conj(eigvecs[basis.index_of(0)])
    m_values = basis.m_values.astype(np.float64)
    return eigvecs, eigvals, pole_row, m_values


def evaluate_grid(state: StateVector, thetas, phis) -> np.ndarray:
    """Amplitudes on the outer product of theta and phi samples, shape
    (len(thetas), len(phis))."""
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    phis = np.ascontiguousarray(phis, dtype=np.float64)
    if thetas.ndim != 1 or phis.ndim != 1:
        raise ValueError("thetas and phis must be one-dimensional")
    if not (np.all(np.isfinite(thetas)) and np.all(np.isfinite(phis))):
        raise ValueError("grid angles must be finite")
    if np.any(thetas < 0.0) or np.any(thetas > math.pi):
        raise ValueError("theta samples must lie in [0, pi]")
    eigvecs, eigvals, pole_row, m_values = _probe_inputs(state)
    scale = pole_amplitude(state.basis.l)
    return kernels.grid_amplitudes(
        eigvecs, eigvals, pole_row, state.amplitudes, m_values, scale, thetas, phis
    )


def evaluate(state: StateVector, point: SphericalPoint) -> complex:
    """Amplitude <theta, phi | state>."""
    grid = evaluate_grid(state, [point.theta], [point.phi])
    return complex(grid[0, 0])


def is_real_field(state: StateVector, tol: float = _REAL_STATE_TOL) -> bool:
    """Whether the state evaluates to a real-valued function on the sphere."""
    amps = state.amplitudes
    signs = (-1.0) ** state.basis.m_values
    defect = np.abs(amps - signs * np.conj(amps[::-1])).max()
    return defect <= tol * max(1.0, state.norm())


@dataclass(frozen=True)
class TrigForm:
    """Band-limited trigonometric closed form of a real-valued wavefunction.

    terms maps (k, m, phi_parity) to a real coefficient of the product
    T_k(theta) * {cos,sin}(m phi), where T_k(theta) is cos(k theta) when m
    is even and sin(k theta) when m is odd (the theta-parity forced by the
    sin(theta)^m factor of the harmonics).
    """

    l: int
    terms: dict[tuple[int, int, str], float]

    def evaluate(self, theta, phi):
        theta = np.asarray(theta, dtype=np.float64)
        phi = np.asarray(phi, dtype=np.float64)
        out = np.zeros(np.broadcast(theta, phi).shape)
        for (k, m, parity), coeff in self.terms.items():
            polar = np.cos(k * theta) if m % 2 == 0 else np.sin(k * theta)
            azim = np.cos(m * phi) if parity == "cos" else np.sin(m * phi)
            out = out + coeff * polar * azim
        return out if out.shape else float(out)

    def theta_profile(self) -> dict[int, float]:
        """Coefficients of the axially symmetric part, sum_k c_k cos(k theta)."""
        return {k: c for (k, m, parity), c in self.terms.items() if m == 0}

    def rendered(self) -> str:
        """Human-readable formula, terms ordered by (m, parity, k)."""
        if not self.terms:
            return "0"
        parts = []
        order = sorted(self.terms, key=lambda key: (key[1], key[2], key[0]))
        for k, m, parity in order:
            factors = [format(self.terms[(k, m, parity)], ".17g")]
            if k > 0 or m % 2 == 1:
                polar = "cos" if m % 2 == 0 else "sin"
                factors.append(f"{polar}({k}*theta)" if k != 1 else f"{polar}(theta)")
            if m > 0:
                factors.append(f"{parity}({m}*phi)" if m != 1 else f"{parity}(phi)")
            parts.append("*".join(factors))
        return " + ".join(parts)


def _require_real_field(state: StateVector, what: str):
    if not is_real_field(state):
        raise ValueError(
            f"{what} requires a real-valued wavefunction; combine |l,m> states "
            "into real-basis states first (see angmom.realbasis)"
        )


def trig_expansion(state: StateVector) -> TrigForm:
    """Exact band-limited closed form, fitted from a (2l+2)x(2l+2) sample grid.

    The fit separates: an FFT over the uniform phi grid isolates each
    azimuthal order m, then the theta profile of each order is solved
    against its cos/sin basis in one least-squares pass. The result is
    checked against an independent grid; failure there means the linear
    system degenerated, which is unexpected at any supported l.
    """
    _require_real_field(state, "trig_expansion")
    l = state.basis.l
    n = 2 * l + 2
    thetas = math.pi * (np.arange(n) + 0.5) / n
    phis = TWO_PI * np.arange(n) / n
    values = evaluate_grid(state, thetas, phis).real

    spectrum = np.fft.rfft(values, axis=1)
    cos_profiles = 2.0 * spectrum.real / n  # order m amplitude A_m(theta)
    cos_profiles[:, 0] /= 2.0
    sin_profiles = -2.0 * spectrum.imag / n  # order m amplitude B_m(theta)

    k_all = np.arange(l + 1)
    cos_design = np.cos(np.outer(thetas, k_all))  # even-m theta basis
    sin_design = np.sin(np.outer(thetas, k_all[1:]))  # odd-m theta basis

    terms: dict[tuple[int, int, str], float] = {}

    def fit(m: int, parity: str, profile: np.ndarray):
        if m % 2 == 0:
            coeffs = np.linalg.lstsq(cos_design, profile, rcond=None)[0]
            ks = k_all
        else:
            coeffs = np.linalg.lstsq(sin_design, profile, rcond=None)[0]
            ks = k_all[1:]
        for k, coeff in zip(ks, coeffs):
            if abs(coeff) >= _COEFF_PRUNE_TOL:
                terms[(int(k), m, parity)] = float(coeff)

    for m in range(l + 1):
        fit(m, "cos", cos_profiles[:, m])
        if m > 0:
            fit(m, "sin", sin_profiles[:, m])

    form = TrigForm(l, terms)

    check_thetas = math.pi * (np.arange(n + 3) + 0.5) / (n + 3)
    check_phis = TWO_PI * (np.arange(n + 1) + 0.37) / (n + 1)
    reference = evaluate_grid(state, check_thetas, check_phis).real
    residual = np.abs(
        form.evaluate(check_thetas[:, None], check_phis[None, :]) - reference
    ).max()
    if residual > _FIT_RESIDUAL_TOL:
        raise RuntimeError(
            f"trigonometric fit residual {residual:.3e} exceeds "
            f"{_FIT_RESIDUAL_TOL}; the fit system is ill-conditioned"
        )
    return form


def _bisect_zero(profile, lo: float, hi: float, tol: float = 1e-12) -> float:
    f_lo = profile(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = profile(mid)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def nodal_cones(state: StateVector) -> list[float]:
    """Polar angles in (0, pi) where an axially symmetric wavefunction
    changes sign. The state must be invariant under z-rotations, i.e. hold
    no m != 0 amplitude."""
    basis = state.basis
    amps = state.amplitudes
    off_axis = np.abs(np.delete(amps, basis.index_of(0))).max() if basis.l else 0.0
    if off_axis > _AXISYMMETRY_TOL * max(1.0, state.norm()):
        raise ValueError(
            "state is not axially symmetric (m != 0 amplitudes present); "
            "nodal cones are only defined for z-rotation-invariant states"
        )
    a0 = amps[basis.index_of(0)]
    if abs(a0) == 0.0:
        return []
    # Drop the sub-tolerance off-axis noise and the global phase, leaving a
    # manifestly real pure-m=0 state for the fit.
    projected = np.zeros_like(amps)
    projected[basis.index_of(0)] = abs(a0)
    coeffs = trig_expansion(StateVector(basis, projected)).theta_profile()

    def profile(theta: float) -> float:
        return sum(c * math.cos(k * theta) for k, c in coeffs.items())

    samples = max(256, 16 * basis.l)
    grid = np.linspace(0.0, math.pi, samples + 1)
    values = np.array([profile(t) for t in grid])
    zeros: list[float] = []
    for i in range(samples):
        if values[i] == 0.0 and 0.0 < grid[i] < math.pi:
            zeros.append(grid[i])
        elif (values[i] < 0.0) != (values[i + 1] < 0.0):
            zeros.append(_bisect_zero(profile, grid[i], grid[i + 1]))
    zeros.sort()
    return [t for i, t in enumerate(zeros) if i == 0 or t - zeros[i - 1] > 1e-9]


@dataclass(frozen=True)
class ShapeMesh:
    """Radial surface r = |Y(theta, phi)| on a lat-long grid, with the
    phase sign of the (real) wavefunction recorded per vertex.

    vertices is row-major over the grid, (n_theta * n_phi, 3), scaled by
    gain; values holds the unscaled signed amplitudes.
    """

    l: int
    label: str
    n_theta: int
    n_phi: int
    gain: float
    thetas: np.ndarray
    phis: np.ndarray
    values: np.ndarray
    signs: np.ndarray
    vertices: np.ndarray


def shape_mesh(
    state: StateVector,
    n_theta: int,
    n_phi: int,
    gain: float = 1.0,
    label: str = "",
) -> ShapeMesh:
    """Sample the magnitude surface of a real-valued state.

    Poles are duplicated per phi column (standard lat-long topology); when
    the wavefunction vanishes at a pole, the vertex sign is taken from the
    limit along theta in that column.
    """
    if n_theta < 8 or n_phi < 8:
        raise ValueError(f"resolution must be at least 8x8, got {n_theta}x{n_phi}")
    if not (math.isfinite(gain) and gain > 0.0):
        raise ValueError(f"gain must be finite and positive, got {gain!r}")
    _require_real_field(state, "shape_mesh")

    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = TWO_PI * np.arange(n_phi) / n_phi
    values = evaluate_grid(state, thetas, phis).real

    signs = np.where(values >= 0.0, 1, -1).astype(np.int8)
    eps = 1e-7
    for row, inward in ((0, eps), (n_theta - 1, math.pi - eps)):
        if np.abs(values[row]).max() < 1e-12:
            probe = evaluate_grid(state, [inward], phis).real[0]
            signs[row] = np.where(probe >= 0.0, 1, -1)

    radii = np.abs(values) * gain
    sin_t = np.sin(thetas)[:, None]
    cos_t = np.cos(thetas)[:, None]
    x = radii * sin_t * np.cos(phis)[None, :]
    y = radii * sin_t * np.sin(phis)[None, :]
    z = radii * cos_t
    vertices = np.stack([x, y, z], axis=-1).reshape(-1, 3)
    return ShapeMesh(
        l=state.basis.l,
        label=label,
        n_theta=n_theta,
        n_phi=n_phi,
        gain=float(gain),
        thetas=thetas,
        phis=phis,
        values=values,
        signs=signs,
        vertices=vertices,
    )
