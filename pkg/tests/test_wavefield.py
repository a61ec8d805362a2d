"""Tests for the rotate-and-probe wavefunction evaluation."""

import math

import numpy as np
import pytest

from helpers import rotate_point

from angmom.legendre import sh_eval, sphere_grid
from angmom.mirror import mirror_z
from angmom.realbasis import named_state
from angmom.rotation import RotationSpec, exp_rotation
from angmom.su2 import StateVector, build_basis, state
from angmom.wavefield import (
    SphericalPoint,
    evaluate,
    evaluate_grid,
    is_real_field,
    nodal_cones,
    pole_amplitude,
    shape_mesh,
    trig_expansion,
)


def _sphere_norm(profile, l_max=8):
    """Quadrature oracle: L2 norm over the sphere of profile(theta, phi)."""
    thetas, phis, weights = sphere_grid(l_max)
    values = profile(thetas[:, None], phis[None, :])
    return math.sqrt(float(np.sum(weights[:, None] * np.abs(values) ** 2)))


class TestSphericalPoint:
    def test_phi_wraps(self):
        assert SphericalPoint(0.3, 2 * math.pi + 0.25).phi == pytest.approx(0.25)
        assert SphericalPoint(0.3, -0.5).phi == pytest.approx(2 * math.pi - 0.5)

    def test_theta_range_enforced(self):
        with pytest.raises(ValueError):
            SphericalPoint(-0.1, 0.0)
        with pytest.raises(ValueError):
            SphericalPoint(math.pi + 0.1, 0.0)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            SphericalPoint(float("nan"), 0.0)


class TestPoleAmplitude:
    def test_matches_unit_norm_oracle(self):
        # Solve ||c * profile|| = 1 for the pole value of each profile.
        cases = {
            0: (lambda t, p: np.ones(np.broadcast(t, p).shape), 0.28209479177387814),
            1: (lambda t, p: np.cos(t) * np.ones_like(p), 0.4886025119029199),
            2: (
                lambda t, p: 0.25 * (1 + 3 * np.cos(2 * t)) * np.ones_like(p),
                0.6307831305050401,
            ),
        }
        for l, (profile, frozen) in cases.items():
            solved = 1.0 / _sphere_norm(profile)
            assert solved == pytest.approx(frozen, abs=1e-12)
            assert pole_amplitude(l) == pytest.approx(solved, abs=1e-12)

    def test_rejects_bad_l(self):
        with pytest.raises(ValueError):
            pole_amplitude(-1)
        with pytest.raises(ValueError):
            pole_amplitude(1.5)


class TestEvaluate:
    def test_pz_profile(self):
        # <theta, phi | 1,0> = A cos(theta), independent of phi
        basis = build_basis(1)
        amp = pole_amplitude(1)
        thetas = np.linspace(0.0, math.pi, 13)
        phis = np.array([0.0, 1.1, 4.4])
        values = evaluate_grid(state(basis, 0), thetas, phis)
        assert np.abs(values - amp * np.cos(thetas)[:, None]).max() < 1e-13

    def test_z2_profile(self):
        basis = build_basis(2)
        l0 = pole_amplitude(2)
        thetas = np.linspace(0.0, math.pi, 13)
        values = evaluate_grid(state(basis, 0), thetas, np.array([2.2]))[:, 0]
        assert np.abs(values - (l0 / 4) * (1 + 3 * np.cos(2 * thetas))).max() < 1e-13

    def test_s_state_constant(self):
        values = evaluate_grid(
            named_state(0, "s").vector, np.linspace(0, math.pi, 9), np.linspace(0, 6, 9)
        )
        assert np.abs(values - pole_amplitude(0)).max() < 1e-15

    def test_point_matches_grid(self):
        target = named_state(2, "xz").vector
        point = SphericalPoint(1.234, 5.4)
        single = evaluate(target, point)
        grid = evaluate_grid(target, np.array([1.234]), np.array([5.4]))[0, 0]
        assert single == grid

    def test_linear_in_amplitudes(self):
        rng = np.random.default_rng(5)
        basis = build_basis(3)
        a = rng.normal(size=7) + 1j * rng.normal(size=7)
        b = rng.normal(size=7) + 1j * rng.normal(size=7)
        thetas, phis = np.linspace(0, math.pi, 6), np.linspace(0, 6, 5)
        combined = evaluate_grid(StateVector(basis, a + 2j * b), thetas, phis)
        separate = evaluate_grid(StateVector(basis, a), thetas, phis) + 2j * evaluate_grid(
            StateVector(basis, b), thetas, phis
        )
        assert np.abs(combined - separate).max() < 1e-13

    def test_theta_out_of_range(self):
        with pytest.raises(ValueError):
            evaluate_grid(state(build_basis(1), 0), [3.5], [0.0])

    @pytest.mark.parametrize("l", range(11))
    def test_matches_legendre_reference(self, l):
        basis = build_basis(l)
        thetas = np.linspace(0.0, math.pi, 50)
        phis = 2 * math.pi * np.arange(50) / 50
        for m in range(-l, l + 1):
            algebraic = evaluate_grid(state(basis, m), thetas, phis)
            reference = sh_eval(l, m, thetas[:, None], phis[None, :])
            assert np.abs(algebraic - reference).max() < 1e-10

    @pytest.mark.parametrize("l", range(1, 7))
    def test_pole_probing_lemma(self, l):
        # m != 0 states vanish at the north pole
        basis = build_basis(l)
        phis = np.linspace(0.0, 6.0, 7)
        for m in range(-l, l + 1):
            if m == 0:
                continue
            values = evaluate_grid(state(basis, m), np.array([0.0]), phis)
            assert np.abs(values).max() < 1e-13

    @pytest.mark.parametrize("axis", ["x", "y", "z"])
    def test_rotation_covariance(self, axis):
        rng = np.random.default_rng(11)
        for l in (1, 2, 4):
            basis = build_basis(l)
            amps = rng.normal(size=basis.dimension) + 1j * rng.normal(size=basis.dimension)
            psi = StateVector(basis, amps)
            for angle in (0.7, -2.1):
                rotated = exp_rotation(basis, RotationSpec(axis, angle)).apply(psi)
                for theta in (0.4, 1.3, 2.8):
                    for phi in (0.0, 2.0, 5.1):
                        moved = evaluate(rotated, SphericalPoint(theta, phi))
                        t_back, p_back = rotate_point(axis, -angle, theta, phi)
                        original = evaluate(psi, SphericalPoint(t_back, p_back))
                        assert abs(moved - original) < 1e-10

    def test_z_mirror_covariance(self):
        rng = np.random.default_rng(12)
        basis = build_basis(3)
        amps = rng.normal(size=7) + 1j * rng.normal(size=7)
        psi = StateVector(basis, amps)
        mirrored = mirror_z(basis).apply(psi)
        thetas = np.linspace(0.0, math.pi, 15)
        phis = np.linspace(0.0, 6.0, 8)
        direct = evaluate_grid(mirrored, thetas, phis)
        reflected = evaluate_grid(psi, math.pi - thetas, phis)
        assert np.abs(direct - reflected).max() < 1e-10

    @pytest.mark.parametrize("l", range(11))
    def test_parseval(self, l):
        rng = np.random.default_rng(100 + l)
        basis = build_basis(l)
        amps = rng.normal(size=basis.dimension) + 1j * rng.normal(size=basis.dimension)
        psi = StateVector(basis, amps)
        thetas, phis, weights = sphere_grid(l)
        values = evaluate_grid(psi, thetas, phis)
        integral = float(np.sum(weights[:, None] * np.abs(values) ** 2))
        expected = float(np.sum(np.abs(amps) ** 2))
        assert integral == pytest.approx(expected, rel=1e-8)

    def test_xy_fourfold_law_on_grid(self):
        xy = named_state(2, "xy").vector
        thetas = np.linspace(0.0, math.pi, 11)
        phis = np.linspace(0.0, 2 * math.pi, 12, endpoint=False)
        base = evaluate_grid(xy, thetas, phis)
        shifted = evaluate_grid(xy, thetas, phis + math.pi / 2)
        assert np.abs(shifted + base).max() < 1e-11


class TestTrigExpansion:
    def test_pz_single_term(self):
        form = trig_expansion(state(build_basis(1), 0))
        assert set(form.terms) == {(1, 0, "cos")}
        assert form.terms[(1, 0, "cos")] == pytest.approx(pole_amplitude(1), abs=1e-12)

    def test_px_single_term(self):
        form = trig_expansion(named_state(1, "x").vector)
        assert set(form.terms) == {(1, 1, "cos")}
        assert form.terms[(1, 1, "cos")] == pytest.approx(pole_amplitude(1), abs=1e-12)

    def test_z2_terms(self):
        form = trig_expansion(state(build_basis(2), 0))
        l0 = pole_amplitude(2)
        assert set(form.terms) == {(0, 0, "cos"), (2, 0, "cos")}
        assert form.terms[(0, 0, "cos")] == pytest.approx(l0 / 4, abs=1e-12)
        assert form.terms[(2, 0, "cos")] == pytest.approx(3 * l0 / 4, abs=1e-12)

    def test_xy_terms(self):
        form = trig_expansion(named_state(2, "xy").vector)
        l0 = pole_amplitude(2)
        coeff = math.sqrt(3.0) / 4 * l0
        assert set(form.terms) == {(0, 2, "sin"), (2, 2, "sin")}
        assert form.terms[(0, 2, "sin")] == pytest.approx(coeff, abs=1e-12)
        assert form.terms[(2, 2, "sin")] == pytest.approx(-coeff, abs=1e-12)

    def test_x2y2_meridian_profile(self):
        # L(theta) = (sqrt(3)/4) (1 - cos 2 theta) l0 along phi = 0
        form = trig_expansion(named_state(2, "x2-y2").vector)
        l0 = pole_amplitude(2)
        thetas = np.linspace(0.0, math.pi, 19)
        profile = form.evaluate(thetas, np.zeros_like(thetas))
        expected = math.sqrt(3.0) / 4 * (1 - np.cos(2 * thetas)) * l0
        assert np.abs(profile - expected).max() < 1e-12

    @pytest.mark.parametrize("l,label", [(1, "y"), (2, "yz"), (3, "3,2,sin"), (4, "4,0")])
    def test_form_reproduces_point_evaluation(self, l, label):
        target = named_state(l, label).vector
        form = trig_expansion(target)
        rng = np.random.default_rng(200 + l)
        thetas = rng.uniform(0.0, math.pi, 40)
        phis = rng.uniform(0.0, 2 * math.pi, 40)
        direct = np.array(
            [evaluate(target, SphericalPoint(t, p)).real for t, p in zip(thetas, phis)]
        )
        fitted = form.evaluate(thetas, phis)
        assert np.abs(fitted - direct).max() < 1e-10

    def test_no_sub_tolerance_terms_survive(self):
        for l, label in ((2, "xy"), (3, "3,1,cos")):
            form = trig_expansion(named_state(l, label).vector)
            assert all(abs(c) >= 1e-12 for c in form.terms.values())

    def test_complex_state_rejected(self):
        with pytest.raises(ValueError, match="real"):
            trig_expansion(state(build_basis(2), 1))

    def test_rendered_formula_mentions_terms(self):
        text = trig_expansion(state(build_basis(2), 0)).rendered()
        assert "cos(2*theta)" in text


class TestNodalCones:
    def test_z2_cones(self):
        # Bisection oracle on the raw profile 1 + 3 cos(2 theta).
        lo, hi = 0.1, math.pi / 2

        def profile(t):
            return 1 + 3 * math.cos(2 * t)

        while hi - lo > 1e-14:
            mid = (lo + hi) / 2
            if (profile(lo) < 0) != (profile(mid) < 0):
                hi = mid
            else:
                lo = mid
        oracle_first = (lo + hi) / 2
        assert oracle_first == pytest.approx(math.acos(1 / math.sqrt(3.0)), abs=1e-12)

        cones = nodal_cones(state(build_basis(2), 0))
        assert len(cones) == 2
        assert math.degrees(cones[0]) == pytest.approx(54.7356, abs=1e-3)
        assert math.degrees(cones[1]) == pytest.approx(125.2644, abs=1e-3)
        assert cones[0] == pytest.approx(oracle_first, abs=1e-10)
        assert cones[1] == pytest.approx(math.pi - oracle_first, abs=1e-10)

    def test_pz_equator(self):
        cones = nodal_cones(state(build_basis(1), 0))
        assert len(cones) == 1
        assert math.degrees(cones[0]) == pytest.approx(90.0, abs=1e-8)

    def test_s_state_has_none(self):
        assert nodal_cones(named_state(0, "s").vector) == []

    @pytest.mark.parametrize("l", [3, 4, 7, 10])
    def test_matches_legendre_roots(self, l):
        # Independent oracle: zeros of the m=0 profile are arccos of the
        # Legendre polynomial roots.
        coeffs = np.zeros(l + 1)
        coeffs[l] = 1.0
        expected = np.sort(np.arccos(np.polynomial.legendre.legroots(coeffs)))
        got = nodal_cones(state(build_basis(l), 0))
        assert len(got) == l
        assert np.abs(np.array(got) - expected).max() < 1e-9

    def test_requires_axisymmetric_state(self):
        with pytest.raises(ValueError, match="axially symmetric"):
            nodal_cones(named_state(2, "xy").vector)


class TestShapeMesh:
    def test_two_sphere_geometry(self):
        mesh = shape_mesh(state(build_basis(1), 0), 24, 32)
        amp = pole_amplitude(1)
        vx, vy, vz = mesh.vertices.T
        upper = np.abs(vx**2 + vy**2 + (vz - amp / 2) ** 2 - (amp / 2) ** 2)
        lower = np.abs(vx**2 + vy**2 + (vz + amp / 2) ** 2 - (amp / 2) ** 2)
        assert np.minimum(upper, lower).max() < 1e-10

    def test_s_state_sphere(self):
        mesh = shape_mesh(named_state(0, "s").vector, 9, 8)
        radii = np.linalg.norm(mesh.vertices, axis=1)
        assert np.abs(radii - pole_amplitude(0)).max() < 1e-14
        assert np.all(mesh.signs == 1)

    def test_vertex_radius_matches_evaluation(self):
        target = named_state(2, "xz").vector
        mesh = shape_mesh(target, 12, 16, gain=2.5)
        radii = np.linalg.norm(mesh.vertices, axis=1).reshape(12, 16)
        direct = np.abs(evaluate_grid(target, mesh.thetas, mesh.phis))
        assert np.abs(radii - 2.5 * direct).max() < 1e-12

    def test_xy_equator_ring(self):
        # |xy> on the equator has radius |L0 sin(2 phi)| with L0 = (sqrt3/2) l0
        mesh = shape_mesh(named_state(2, "xy").vector, 17, 24)
        ring = np.abs(mesh.values[8])  # theta = pi/2 row
        big_l0 = math.sqrt(3.0) / 2 * pole_amplitude(2)
        assert np.abs(ring - np.abs(big_l0 * np.sin(2 * mesh.phis))).max() < 1e-12

    def test_pz_signs_split_by_hemisphere(self):
        mesh = shape_mesh(state(build_basis(1), 0), 16, 8)
        assert np.all(mesh.signs[:7] == 1)
        assert np.all(mesh.signs[9:] == -1)

    def test_pole_signs_taken_from_limit(self):
        # |xy> vanishes at the poles; the limit along theta fixes the sign
        # per column (away from the node planes, where the limit is 0 and
        # the sign is arbitrary).
        mesh = shape_mesh(named_state(2, "xy").vector, 16, 16)
        lobes = np.abs(np.sin(2 * mesh.phis)) > 1e-6
        expected = np.where(np.sin(2 * mesh.phis) >= 0, 1, -1)
        assert np.array_equal(mesh.signs[0][lobes], expected[lobes])
        assert np.array_equal(mesh.signs[-1][lobes], expected[lobes])

    def test_resolution_floor(self):
        with pytest.raises(ValueError, match="8x8"):
            shape_mesh(state(build_basis(1), 0), 7, 64)

    def test_complex_state_rejected(self):
        with pytest.raises(ValueError, match="realbasis"):
            shape_mesh(state(build_basis(1), 1), 16, 16)


def test_is_real_field():
    assert is_real_field(named_state(2, "yz").vector)
    assert is_real_field(state(build_basis(2), 0))
    assert not is_real_field(state(build_basis(2), 2))
