"""Reference spherical harmonics from associated-Legendre recurrences.

This module is deliberately independent of the operator machinery: it is
the cross-check that the rotate-and-probe evaluation elsewhere in the
package reproduces the conventional special-function route.

P_l^m is evaluated by the standard stable scheme: diagonal seed
P_m^m(x) = (-1)^m (2m-1)!! (1-x^2)^{m/2} (the (-1)^m is the
Condon-Shortley sign), one off-diagonal step
P_{m+1}^m = (2m+1) x P_m^m, then upward recurrence in degree

    (l - m) P_l^m = (2l - 1) x P_{l-1}^m - (l + m - 1) P_{l-2}^m.
"""

from __future__ import annotations

import math

import numpy as np


def assoc_legendre(l: int, m: int, x):
    """Associated Legendre function P_l^m(x), Condon-Shortley phase included.

    Accepts scalars or arrays for x; requires 0 <= m <= l and |x| <= 1.
    """
    if isinstance(l, bool) or not isinstance(l, (int, np.integer)):
        raise ValueError(f"l must be an integer, got {l!r}")
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise ValueError(f"m must be an integer, got {m!r}")
    if l < 0 or m < 0 or m > l:
        raise ValueError(f"require 0 <= m <= l, got l={l}, m={m}")
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.abs(arr) > 1.0):
        raise ValueError("x must lie in [-1, 1]")

    # Diagonal seed P_m^m.
    p_prev = np.full(arr.shape, 1.0)
    if m > 0:
        somx2 = np.sqrt((1.0 - arr) * (1.0 + arr))
        fact = 1.0
        for _ in range(m):
            p_prev = p_prev * (-fact) * somx2
            fact += 2.0
    if l == m:
        return p_prev if p_prev.shape else float(p_prev)

    p_curr = arr * (2.0 * m + 1.0) * p_prev  # P_{m+1}^m
    for degree in range(m + 2, l + 1):
        p_next = (
            (2.0 * degree - 1.0) * arr * p_curr - (degree + m - 1.0) * p_prev
        ) / (degree - m)
        p_prev, p_curr = p_curr, p_next
    return p_curr if p_curr.shape else float(p_curr)


def legendre_table(l_max: int, x: float) -> np.ndarray:
    """All P_l^m(x) for 0 <= m <= l <= l_max at one point.

    Returns a lower-triangular (l_max+1, l_max+1) array indexed [l, m];
    entries with m > l are zero. table[0, 0] is always 1.
    """
    if l_max < 0:
        raise ValueError(f"l_max must be non-negative, got {l_max}")
    if abs(x) > 1.0:
        raise ValueError("x must lie in [-1, 1]")
    table = np.zeros((l_max + 1, l_max + 1))
    somx2 = math.sqrt((1.0 - x) * (1.0 + x))
    diagonal = 1.0
    fact = 1.0
    for m in range(l_max + 1):
        table[m, m] = diagonal
        if m + 1 <= l_max:
            table[m + 1, m] = x * (2.0 * m + 1.0) * diagonal
        for l in range(m + 2, l_max + 1):
            table[l, m] = (
                (2.0 * l - 1.0) * x * table[l - 1, m] - (l + m - 1.0) * table[l - 2, m]
            ) / (l - m)
        diagonal *= -fact * somx2
        fact += 2.0
    return table


def sh_norm(l: int, m_abs: int) -> float:
    """Orthonormalization factor sqrt((2l+1)/(4 pi) * (l-|m|)!/(l+|m|)!)."""
    return math.sqrt((2 * l + 1) / (4.0 * math.pi)) * math.exp(
        0.5 * (math.lgamma(l - m_abs + 1) - math.lgamma(l + m_abs + 1))
    )


def sh_eval(l: int, m: int, theta, phi):
    """Unit sphere-norm spherical harmonic Y_{l,m}(theta, phi).

    Negative m via the conjugation symmetry Y_{l,-m} = (-1)^m conj(Y_{l,m}).
    Broadcasts over array-valued theta and phi.
    """
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise ValueError(f"m must be an integer, got {m!r}")
    if abs(m) > l:
        raise ValueError(f"m={m} outside the allowed range -{l}..{l}")
    theta = np.asarray(theta, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    m_abs = abs(m)
    base = sh_norm(l, m_abs) * assoc_legendre(l, m_abs, np.cos(theta))
    value = base * np.exp(1j * m_abs * phi)
    if m < 0:
        value = (-1.0) ** m_abs * np.conj(value)
    value = np.asarray(value, dtype=np.complex128)
    return value if value.shape else complex(value)


def sphere_grid(l_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Quadrature grid exact for products of harmonics up to degree l_max.

    Gauss-Legendre nodes in cos(theta) and a uniform phi grid, both with
    2*l_max + 2 points. Returns (thetas, phis, row_weights) such that
    sum_ij row_weights[i] * f(thetas[i], phis[j]) integrates f over the
    sphere.
    """
    if l_max < 0:
        raise ValueError(f"l_max must be non-negative, got {l_max}")
    n = 2 * l_max + 2
    nodes, weights = np.polynomial.legendre.leggauss(n)
    thetas = np.arccos(nodes)
    phis = 2.0 * math.pi * np.arange(n) / n
    return thetas, phis, weights * (2.0 * math.pi / n)
