"""Tests for Lipschitz witness construction and verification."""

import json

import numpy as np
import pytest

from bergman.functions import BallPoly, PowerSingularity, TaylorPoly
from bergman.quadrature import BallGrid
from bergman.sampling import sample_disk
from bergman.witness import (SAFETY, Witness, build_witness,
                             build_witness_ball, ball_witness_constant,
                             derivative_bound_check, disk_constant,
                             local_sup_h, verify_lipschitz,
                             witness_integrability)

N_PAIRS = 20_000  # verification pair count for unit tests


@pytest.fixture(scope="module")
def section_04():
    return PowerSingularity(0.4).taylor_section(50)


class TestLocalSup:
    def test_constant_function(self):
        assert local_sup_h(TaylorPoly([2.0]), 0.3 + 0.1j, 0.5) == 0.0

    def test_identity_at_origin(self):
        # sup of (1-|u|^2)*1 over |u| <= 0.5 is 1, times C(0.5) = 6
        assert local_sup_h(TaylorPoly([0, 1]), 0j, 0.5) == pytest.approx(6.0)

    def test_square_off_center(self):
        # f = z^2: maximize 2|u|(1-|u|^2) over the Euclidean image of
        # D(0.5, 0.5), which is the real interval [0, 0.8]
        t = np.linspace(0.0, 0.8, 200_001)
        oracle = np.max(2 * t * (1 - t ** 2))
        val = local_sup_h(TaylorPoly([0, 0, 1]), 0.5 + 0j, 0.5)
        np.testing.assert_allclose(val, 6.0 * oracle, rtol=1e-3)

    def test_constant_factor(self):
        assert disk_constant(0.5) == pytest.approx(6.0)


class TestBuildWitness:
    def test_zero_function(self):
        w = build_witness(TaylorPoly([0.0]), "rho", 0.5)
        z = sample_disk(1, 100)
        assert np.all(w.g_values(z) == 0.0)

    def test_identity_structure(self):
        w = build_witness(TaylorPoly([0, 1]), "rho", 0.5)
        z = sample_disk(2, 200)
        h = SAFETY * 6.0 * np.asarray(
            [local_sup_h(w.f, complex(p), 0.5) / 6.0 for p in z])
        np.testing.assert_allclose(w.g_values(z), 2 * np.abs(z) + h,
                                   rtol=1e-12)

    def test_scale_covariance(self, section_04):
        c = 3.7
        w1 = build_witness(section_04, "rho", 0.5)
        scaled = TaylorPoly(c * section_04.coeffs)
        w2 = build_witness(scaled, "rho", 0.5)
        z = sample_disk(3, 500)
        np.testing.assert_allclose(w2.g_values(z), c * w1.g_values(z),
                                   rtol=1e-12)

    def test_euclid_divides_by_boundary_gap(self, section_04):
        wr = build_witness(section_04, "rho", 0.5)
        we = build_witness(section_04, "euclid", 0.5)
        z = sample_disk(4, 300)
        np.testing.assert_allclose(we.g_values(z),
                                   wr.g_values(z) / (1 - np.abs(z)),
                                   rtol=1e-12)


class TestVerifyLipschitz:
    def test_constant_witness_for_identity(self):
        # |z - w| <= 2 rho(z, w), so g = 1 works for f = z
        rep = verify_lipschitz(TaylorPoly([0, 1]),
                               lambda z: np.ones(len(z)), metric="rho",
                               n_pairs=N_PAIRS, seed=7, r=0.5)
        assert rep.max_violation <= 0.0

    @pytest.mark.parametrize("metric", ["rho", "beta", "euclid"])
    def test_section_witness(self, section_04, metric):
        w = build_witness(section_04, metric, 0.5)
        rep = verify_lipschitz(section_04, w, n_pairs=N_PAIRS, seed=11)
        assert rep.max_violation <= 0.0

    def test_polynomial_witness(self):
        rng = np.random.default_rng(12)
        f = TaylorPoly(rng.normal(size=13) + 1j * rng.normal(size=13))
        w = build_witness(f, "rho", 0.5)
        rep = verify_lipschitz(f, w, n_pairs=N_PAIRS, seed=13)
        assert rep.max_violation <= 0.0

    def test_beta_accepts_rho_witness(self, section_04):
        # rho <= beta, so the rho-witness verifies under beta unchanged
        w = build_witness(section_04, "rho", 0.5)
        rep = verify_lipschitz(section_04, w, metric="beta",
                               n_pairs=N_PAIRS, seed=17)
        assert rep.max_violation <= 0.0

    def test_stratification_counts(self, section_04):
        w = build_witness(section_04, "rho", 0.5)
        rep = verify_lipschitz(section_04, w, n_pairs=1001, seed=3)
        assert rep.n_near >= 0.4 * 1001
        assert rep.n_far >= 0.4 * 1001

    def test_deterministic_replay(self, section_04):
        w = build_witness(section_04, "rho", 0.5)
        r1 = verify_lipschitz(section_04, w, n_pairs=2000, seed=5)
        r2 = verify_lipschitz(section_04, w, n_pairs=2000, seed=5)
        assert r1.max_violation == r2.max_violation
        assert r1.argmax_pair == r2.argmax_pair

    def test_report_serializes(self, section_04):
        w = build_witness(section_04, "rho", 0.5)
        rep = verify_lipschitz(section_04, w, n_pairs=500, seed=5)
        obj = json.loads(json.dumps(rep.to_json()))
        assert obj["n_pairs"] == 500
        assert "max_violation" in obj


class TestDerivativeBound:
    def test_constant_function(self):
        w = build_witness(TaylorPoly([1.5]), "rho", 0.5)
        assert derivative_bound_check(TaylorPoly([1.5]), w) <= 0.0

    @pytest.mark.parametrize("metric", ["rho", "beta"])
    def test_identity(self, metric):
        f = TaylorPoly([0, 1])
        w = build_witness(f, metric, 0.5)
        assert derivative_bound_check(f, w, metric) <= 0.0

    def test_cube_euclid(self):
        f = TaylorPoly([0, 0, 0, 1])
        w = build_witness(f, "euclid", 0.5)
        assert derivative_bound_check(f, w, "euclid") <= 0.0

    def test_explicit_witness_chain(self, section_04):
        # any verified witness dominates the limiting derivative bound
        w = build_witness(section_04, "rho", 0.5)
        assert verify_lipschitz(section_04, w, n_pairs=5000,
                                seed=2).max_violation <= 0.0
        assert derivative_bound_check(section_04, w) <= 0.0


class TestIntegrability:
    def test_polynomial_bounded_witness(self):
        f = TaylorPoly([1, 0.5, -0.25])
        w = build_witness(f, "rho", 0.5)
        res = witness_integrability(w, 2, 0.0)
        assert res.converged

    def test_singular_function_rho(self):
        w = build_witness(PowerSingularity(0.4), "rho", 0.5)
        res = witness_integrability(w, 2, 0.0)
        assert res.converged

    def test_singular_function_euclid(self):
        # euclid witnesses integrate against the shifted weight p + alpha
        w = build_witness(PowerSingularity(0.4), "euclid", 0.5)
        res = witness_integrability(w, 2, 0.0)
        assert res.converged

    def test_norm_ratio_finite(self, section_04):
        from bergman.quadrature import WeightParams, grid_for, norm_p
        w = build_witness(section_04, "rho", 0.5)
        gnorm = witness_integrability(w, 2, 0.0)
        fnorm = norm_p(section_04, WeightParams(2, 0.0),
                       grid_for(section_04, 0.0))
        assert np.isfinite(gnorm.value / fnorm.value)


class TestBallWitness:
    def test_constant_is_positive(self):
        constant = ball_witness_constant(2, 0.5, n_pairs=4000, seed=202)
        assert 0.0 < constant < 100.0

    def test_constant_function(self):
        f = BallPoly(2, {(0, 0): 2.0 + 1.0j})
        w = Witness(f=f, metric="ball-rho", r=0.5, C=1.0, safety=1.0)
        rep = verify_lipschitz(f, w, n_pairs=2000, seed=31)
        assert rep.max_violation <= 0.0

    @pytest.mark.parametrize("terms", [
        {(1, 0): 1.0},
        {(1, 1): 1.0, (2, 0): 1.0},
    ])
    def test_calibrated_witness_verifies(self, terms):
        f = BallPoly(2, terms)
        w = build_witness_ball(f, 0.5)
        rep = verify_lipschitz(f, w, n_pairs=4000, seed=37)
        assert rep.max_violation <= 0.0

    def test_ball_integrability(self):
        f = BallPoly(2, {(1, 0): 1.0})
        w = build_witness_ball(f, 0.5)
        res = witness_integrability(w, 2, 0.0,
                                    grid=BallGrid(2, 0.0, log2_count=16))
        assert res.converged

    def test_metadata_round_trip(self):
        f = BallPoly(2, {(1, 0): 1.0})
        w = build_witness_ball(f, 0.5)
        meta = json.loads(json.dumps(w.metadata()))
        assert meta["metric"] == "ball-rho"
        assert meta["C"] == pytest.approx(w.C)
