"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line per criterion it covers.  Two
sub-checks are asserted exactly as specified although the computed
quantities are known to sit on the wrong side of their thresholds (the
lifted-series growth factor reaches ~1.42 against a 1.5 bar, and the
bounded-kernel variation over |z| in {0.9, 0.99, 0.999} is ~30% against
a 5% bar because the integral is still climbing toward its finite sup
at those radii); they are kept in their own test functions so the
remaining criteria report independently.
"""

import numpy as np
import pytest

from bergman.suites import SuiteConfig, run_suite

SEED = 42
_CACHE = {}


def suite(name):
    if name not in _CACHE:
        _CACHE[name] = run_suite(SuiteConfig(name, seed=SEED))
    return _CACHE[name]


def _emit(rep, only=None, skip=()):
    ok = True
    for c in rep.checks:
        if only is not None and c.name not in only:
            continue
        if c.name in skip:
            continue
        print(f"[{'PASS' if c.passed else 'FAIL'}] {rep.suite}: {c.name}: "
              f"{c.value:.6g} {c.op} {c.threshold:.6g}")
        ok = ok and c.passed
    return ok


def names(rep):
    return [c.name for c in rep.checks]


class TestCriterion1Geometry:
    def test_metric_axioms_identities_and_ball(self):
        rep = suite("geometry")
        assert _emit(rep)
        assert rep.wall_time_s < 60


class TestCriterion2DifferenceQuotients:
    def test_ratio_limits_disk_and_ball(self):
        rep = suite("lemma4")
        assert _emit(rep)
        assert rep.wall_time_s < 60


class TestCriterion3Quadrature:
    def test_monomials_bidisk_normalization(self):
        rep = suite("quadrature")
        assert _emit(rep)
        assert rep.wall_time_s < 120


class TestCriterion4SeminormEquivalence:
    def test_constant_and_stability(self):
        rep = suite("lemma5")
        assert _emit(rep)


class TestCriterion5Witnesses:
    def test_rho_witnesses(self):
        assert _emit(suite("thm6"))

    def test_beta_witnesses(self):
        assert _emit(suite("thm7"))

    def test_euclid_witnesses(self):
        assert _emit(suite("thm8"))


class TestCriterion6GrowthExponents:
    def test_fitted_slopes(self):
        rep = suite("lemma10")
        slope_checks = [n for n in names(rep) if n.startswith("slope_error")]
        assert len(slope_checks) == 6
        assert _emit(rep, only=slope_checks)

    def test_bounded_case_variation_as_stated(self):
        # asserted at the stated radii and bar; the deep-radii variation
        # is reported in the suite notes
        rep = suite("lemma10")
        assert _emit(rep, only=["bounded_case_relative_variation"])


class TestCriterion7Lifting:
    def test_series_diagonal_orthogonality_scan(self):
        rep = suite("thm11")
        assert _emit(rep)

    def test_rescued_weight_scan(self):
        rep = suite("thm12")
        assert _emit(rep)


class TestCriterion8BorderlineDivergence:
    def test_partial_sum_and_termwise_checks(self):
        rep = suite("a2-diverge")
        assert _emit(rep, only=["a2_partial_sum_increment_1e3_to_1e4",
                                "termwise_ratio_min", "termwise_ratio_max"])

    def test_lift_growth_factor_as_stated(self):
        rep = suite("a2-diverge")
        assert _emit(rep, only=["lift_partial_sum_growth_1e2_to_1e4"])


class TestCriterion9Ball:
    def test_witnesses_and_derivative_norms(self):
        rep = suite("ball-thm13")
        assert _emit(rep)


def test_total_runtime_report():
    total = sum(rep.wall_time_s for rep in _CACHE.values())
    print(f"[INFO] total suite wall time: {total:.1f}s "
          f"across {len(_CACHE)} suites")
    assert total > 0
