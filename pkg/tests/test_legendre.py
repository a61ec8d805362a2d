"""Tests for the associated-Legendre reference harmonics."""

import math

import numpy as np
import pytest

from angmom.legendre import assoc_legendre, legendre_table, sh_eval, sh_norm, sphere_grid

# Explicit Condon-Shortley-phased P_l^m for l <= 4, written out by hand so
# the recurrence is checked against independent arithmetic.
_EXPLICIT = {
    (0, 0): lambda x, s: np.ones_like(x),
    (1, 0): lambda x, s: x,
    (1, 1): lambda x, s: -s,
    (2, 0): lambda x, s: (3 * x**2 - 1) / 2,
    (2, 1): lambda x, s: -3 * x * s,
    (2, 2): lambda x, s: 3 * (1 - x**2),
    (3, 0): lambda x, s: (5 * x**3 - 3 * x) / 2,
    (3, 1): lambda x, s: -1.5 * (5 * x**2 - 1) * s,
    (3, 2): lambda x, s: 15 * x * (1 - x**2),
    (3, 3): lambda x, s: -15 * s**3,
    (4, 0): lambda x, s: (35 * x**4 - 30 * x**2 + 3) / 8,
    (4, 1): lambda x, s: -2.5 * (7 * x**3 - 3 * x) * s,
    (4, 2): lambda x, s: 7.5 * (7 * x**2 - 1) * (1 - x**2),
    (4, 3): lambda x, s: -105 * x * s**3,
    (4, 4): lambda x, s: 105 * (1 - x**2) ** 2,
}


def test_seed_values():
    xs = np.linspace(-1.0, 1.0, 11)
    assert np.array_equal(assoc_legendre(0, 0, xs), np.ones(11))
    assert np.array_equal(assoc_legendre(1, 0, xs), xs)
    # direct polynomial: P_2(x) = (3 x^2 - 1)/2 at x = 0.5
    assert assoc_legendre(2, 0, 0.5) == pytest.approx(-0.125, abs=1e-16)


@pytest.mark.parametrize("lm", sorted(_EXPLICIT))
def test_recurrence_matches_explicit_polynomials(lm):
    l, m = lm
    xs = np.linspace(-1.0, 1.0, 41)
    s = np.sqrt(1.0 - xs**2)
    assert np.abs(assoc_legendre(l, m, xs) - _EXPLICIT[lm](xs, s)).max() < 1e-13


def test_table_matches_single_evaluations():
    for x in (-0.9, -0.3, 0.0, 0.5, 1.0):
        table = legendre_table(6, x)
        assert table[0, 0] == 1.0
        for l in range(7):
            for m in range(l + 1):
                assert table[l, m] == pytest.approx(
                    assoc_legendre(l, m, x), rel=1e-14, abs=1e-14
                )
            assert np.all(table[l, l + 1 :] == 0.0)


def test_table_domain_errors():
    with pytest.raises(ValueError):
        legendre_table(-1, 0.0)
    with pytest.raises(ValueError):
        legendre_table(3, 1.01)


def test_domain_errors():
    with pytest.raises(ValueError):
        assoc_legendre(2, 3, 0.0)
    with pytest.raises(ValueError):
        assoc_legendre(2, -1, 0.0)
    with pytest.raises(ValueError):
        assoc_legendre(2, 1, 1.5)
    with pytest.raises(ValueError):
        sh_eval(2, 3, 0.1, 0.2)


def test_scalar_inputs_return_scalars():
    assert isinstance(assoc_legendre(3, 2, 0.2), float)
    assert isinstance(sh_eval(3, 2, 0.2, 0.3), complex)


def test_constant_harmonic():
    value = sh_eval(0, 0, 0.7, 1.9)
    assert value == pytest.approx(1.0 / math.sqrt(4 * math.pi), abs=1e-16)


def test_polar_harmonics_profiles():
    thetas = np.linspace(0.0, math.pi, 17)
    y10 = sh_eval(1, 0, thetas, np.zeros_like(thetas))
    assert np.abs(y10 - math.sqrt(3 / (4 * math.pi)) * np.cos(thetas)).max() < 1e-15
    # (2,0) profile is proportional to 1 + 3 cos(2 theta)
    y20 = sh_eval(2, 0, thetas, np.zeros_like(thetas))
    l0 = sh_norm(2, 0)
    assert np.abs(y20 - (l0 / 4) * (1 + 3 * np.cos(2 * thetas))).max() < 1e-14


def test_negative_m_conjugation():
    thetas = np.linspace(0.1, 3.0, 9)
    phis = np.linspace(0.0, 6.0, 9)
    for l, m in ((1, 1), (2, 2), (3, 1), (5, 4)):
        plus = sh_eval(l, m, thetas, phis)
        minus = sh_eval(l, -m, thetas, phis)
        assert np.abs(minus - (-1.0) ** m * np.conj(plus)).max() < 1e-14


def test_orthonormality_under_quadrature():
    l_max = 10
    thetas, phis, weights = sphere_grid(l_max)
    pairs = [(l, m) for l in range(l_max + 1) for m in range(-l, l + 1)]
    stack = np.array(
        [sh_eval(l, m, thetas[:, None], phis[None, :]).ravel() for l, m in pairs]
    )
    flat_weights = np.repeat(weights, phis.size)
    gram = (stack * flat_weights) @ stack.conj().T
    assert np.abs(gram - np.eye(len(pairs))).max() < 1e-8


def test_sphere_grid_weights_sum_to_sphere_area():
    _, phis, weights = sphere_grid(4)
    assert weights.sum() * phis.size == pytest.approx(4 * math.pi, rel=1e-13)
