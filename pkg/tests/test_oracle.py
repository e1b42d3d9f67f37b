import cmath

import numpy as np
import pytest

import varregion as vr
from roundtrip_utils import cauchy_derivative, roundtrip_residual


def disk_point(rng, rmax=0.9):
    return complex(rmax * np.sqrt(rng.random()) * np.exp(1j * rng.uniform(-np.pi, np.pi)))


class TestSampleParam:
    def test_deterministic(self):
        for seed in (0, 7, 12345):
            assert vr.sample_param(seed, 4) == vr.sample_param(seed, 4)

    def test_both_variants_appear(self):
        kinds = {type(vr.sample_param(s)) for s in range(64)}
        assert kinds == {vr.ExtremalParam, vr.GeneralParam}

    def test_degree_cap(self):
        for s in range(200):
            p = vr.sample_param(s, max_degree=4)
            if isinstance(p, vr.GeneralParam):
                assert len(p.zeros) <= 4
                assert all(abs(b) <= 0.9 for b in p.zeros)

    def test_generator_maps_into_closed_disk(self):
        z = 0.999 * np.exp(1j * np.linspace(-np.pi, np.pi, 256))
        for s in range(50):
            assert np.all(np.abs(vr.g_eval(vr.sample_param(s), z)) <= 1 + 1e-12)


class TestVerifyMembership:
    def test_rotation_members(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            a = disk_point(rng, 1.0)
            assert vr.verify_membership(vr.ExtremalParam(a), disk_point(rng, 1.0), 16)

    def test_unit_lambda(self):
        assert vr.verify_membership(vr.sample_param(5), cmath.exp(0.3j), 16)

    def test_thousand_sampled_members(self):
        rng = np.random.default_rng(32)
        for seed in range(1000):
            lam = disk_point(rng, 1.0)
            assert vr.verify_membership(vr.sample_param(seed), lam, 16)

    def test_grid_size_validated(self):
        with pytest.raises(ValueError):
            vr.verify_membership(vr.sample_param(0), 0j, 0)


class TestCoefficientReport:
    def test_residuals_small_for_sampled_members(self):
        rng = np.random.default_rng(33)
        for seed in range(50):
            params = vr.RegionParams(z0=0.5 + 0j, lam=disk_point(rng, 0.9),
                                     alpha=0.3 + 0.9j)
            rep = vr.coefficient_report(vr.sample_param(seed), params)
            assert max(rep.residuals.values()) <= 1e-8

    def test_extremal_third_coefficient_formula(self):
        rng = np.random.default_rng(34)
        for _ in range(30):
            a = disk_point(rng, 1.0)
            lam = disk_point(rng, 0.9)
            alpha = disk_point(rng, 2.0)
            if abs(alpha) < 0.1:
                alpha = 1.0 + 0j
            params = vr.RegionParams(z0=0.5 + 0j, lam=lam, alpha=alpha)
            rep = vr.coefficient_report(vr.ExtremalParam(a), params)
            assert rep.residuals["extremal_f3"] <= 1e-8
            expect = 2 * ((1 - abs(lam) ** 2) * a + 3 * lam * (lam - alpha) + alpha**2)
            assert abs(rep.f3 - expect) <= 1e-8

    def test_frozen_rotation_zero_lambda(self):
        # a = 0, lam = 0: f''(0) = -alpha and f'''(0) = 2 alpha^2
        alpha = 1.3 - 0.4j
        params = vr.RegionParams(z0=0.5 + 0j, lam=0j, alpha=alpha)
        rep = vr.coefficient_report(vr.ExtremalParam(0j), params)
        assert abs(rep.f2 + alpha) < 1e-10
        assert abs(rep.f3 - 2 * alpha**2) < 1e-10

    def test_unit_lambda_collapses_omega(self):
        lam = cmath.exp(0.9j)
        alpha = 0.7 + 0.2j
        params = vr.RegionParams(z0=0.5 + 0j, lam=lam, alpha=alpha)
        rep = vr.coefficient_report(vr.sample_param(9), params)
        assert abs(rep.omega2) < 1e-10
        assert abs(rep.f3 - 2 * (3 * lam * (lam - alpha) + alpha**2)) < 1e-8

    def test_derivative_chain_for_general_members(self):
        # g'(0) from circle quadrature equals omega''(0) / (2 (1-|lam|^2))
        rng = np.random.default_rng(35)
        checked = 0
        for seed in range(200):
            p = vr.sample_param(seed)
            if not isinstance(p, vr.GeneralParam):
                continue
            lam = disk_point(rng, 0.85)
            params = vr.RegionParams(z0=0.5 + 0j, lam=lam)
            rep = vr.coefficient_report(p, params)
            g1 = vr.cauchy_coeffs(lambda z: vr.g_eval(p, z), 0.5, 2)[1]
            assert abs(g1 - rep.omega2 / (2 * (1 - abs(lam) ** 2))) < 1e-8
            assert abs(g1) <= 1 + 1e-8
            checked += 1
            if checked >= 40:
                break
        assert checked == 40


class TestReconstruct:
    def test_fixed_point_at_origin(self):
        params = vr.RegionParams(z0=0.5 + 0j, lam=0.2 + 0.1j)
        assert vr.reconstruct_f(0j, vr.sample_param(1), params) == 0j

    def test_two_alpha_unit_lambda_fixture(self):
        # the |alpha| = 2 class is the single function (1/alpha) log((2+alpha z)/(2-alpha z))
        params = vr.RegionParams(z0=0.5 + 0j, lam=1.0 + 0j, alpha=2.0 + 0j)
        for k in range(1, 21):
            z = 0.045 * k * cmath.exp(0.3j)
            got = vr.reconstruct_f(z, vr.ExtremalParam(0.3 + 0j), params)
            expect = 0.5 * np.log((2 + 2 * z) / (2 - 2 * z))
            assert abs(got - expect) < 1e-10

    def test_round_trip_small_sample(self):
        rng = np.random.default_rng(36)
        done = 0
        seed = 0
        while done < 5:
            seed += 1
            p = vr.sample_param(seed)
            params = vr.RegionParams(z0=disk_point(rng, 0.7),
                                     lam=disk_point(rng, 0.8),
                                     alpha=disk_point(rng, 1.5) + 0.2)
            res = roundtrip_residual(params, p)
            if res is None:
                continue
            assert res < 1e-8
            done += 1

    def test_point_outside_disk_rejected(self):
        params = vr.RegionParams(z0=0.5 + 0j, lam=0j)
        with pytest.raises(vr.DomainError):
            vr.reconstruct_f(1.2 + 0j, vr.sample_param(0), params)

    def test_branch_failure_detected(self):
        # choose alpha so that 1 + alpha*G vanishes exactly on the path: for
        # the frozen rotation with lam = 0.8 the transform integral is
        # G(zeta) = (1/0.8)(1/(1 - 0.8*zeta) - 1), and alpha = -1/G(0.45)
        # puts the zero at the path midpoint
        g_mid = (1 / 0.8) * (1 / (1 - 0.8 * 0.45) - 1)
        params = vr.RegionParams(z0=0.9 + 0j, lam=0.8 + 0j, alpha=-1 / g_mid)
        with pytest.raises(vr.DomainError):
            vr.reconstruct_f(0.9 + 0j, vr.ExtremalParam(0j), params)

    def test_transform_reproduces_positive_real_part_map(self):
        # 1 + z F''/F' for F = e^{alpha f} must reproduce p_value
        rng = np.random.default_rng(37)
        for _ in range(5):
            a = disk_point(rng, 1.0)
            lam = disk_point(rng, 0.8)
            alpha = disk_point(rng, 1.5)
            if abs(alpha) < 0.2:
                alpha = 1.0 + 0j
            params = vr.RegionParams(z0=0.5 + 0j, lam=lam, alpha=alpha)
            param = vr.ExtremalParam(a)
            z = disk_point(rng, 0.5)
            s = 0.2 * (1 - abs(z))
            phi = 2 * np.pi * np.arange(32) / 32
            fv = np.array([vr.exp_alpha_f(z + s * np.exp(1j * t), param, params)
                           for t in phi])
            f1 = cauchy_derivative(fv, s, order=1)
            f2 = cauchy_derivative(fv, s, order=2)
            indicator = 1 + z * f2 / f1
            assert abs(indicator - vr.p_value(z, lam, param)) < 1e-6


class TestLemmaZeroCount:
    def test_double_zero_at_all_radii(self):
        rng = np.random.default_rng(38)
        for _ in range(5):
            theta = rng.uniform(-np.pi, np.pi)
            lam = disk_point(rng, 0.85)
            counts = {vr.lemma_g_zero_count(theta, lam, r) for r in (0.5, 0.7, 0.9)}
            assert counts == {2}

    def test_zero_lambda_case(self):
        assert vr.lemma_g_zero_count(0.9, 0j, 0.7) == 2

    def test_input_validation(self):
        with pytest.raises(ValueError):
            vr.lemma_g_zero_count(0.0, 0j, 1.5)
        with pytest.raises(vr.DomainError):
            vr.lemma_g_zero_count(0.0, 1.0 + 0j, 0.5)


class TestHFunction:
    def test_zero_lambda_identity_exact(self):
        assert vr.h_identity_check(0.3 + 0.4j, 0j) == 0.0
        assert vr.h_value(0.3 + 0.4j, 0j) == (0.3 + 0.4j) ** 2

    def test_identity_residual_random(self):
        rng = np.random.default_rng(39)
        for _ in range(1000):
            z, lam = disk_point(rng, 0.95), disk_point(rng, 0.95)
            assert vr.h_identity_check(z, lam) <= 1e-12

    def test_value_matches_quadrature(self):
        # independent oracle: h(z) = 2 * integral of zeta/(1 - lam zeta)^2
        rng = np.random.default_rng(40)
        for lam in (0.5 - 0.3j, 1e-4 + 2e-4j, 0.9j):
            for _ in range(5):
                z = disk_point(rng, 0.9)
                quad = 2 * vr.integrate_segment(lambda w: w / (1 - lam * w) ** 2, z)
                assert abs(vr.h_value(z, lam) - quad) < 1e-12

    def test_nonvanishing_away_from_origin(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            z = disk_point(rng, 0.95)
            if abs(z) < 1e-3:
                z = 0.1 + 0j
            lam = disk_point(rng, 0.95)
            assert abs(vr.h_value(z, lam)) > 1e-14

    def test_key_inequality(self):
        # Re(2/(1 - lam z)) > 1 throughout the disk
        rng = np.random.default_rng(42)
        z = 0.999 * np.sqrt(rng.random(10_000)) * np.exp(1j * rng.uniform(-np.pi, np.pi, 10_000))
        lam = 0.999 * np.sqrt(rng.random(10_000)) * np.exp(1j * rng.uniform(-np.pi, np.pi, 10_000))
        assert np.all((2.0 / (1.0 - lam * z)).real > 1.0)
