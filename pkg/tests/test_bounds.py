"""Gonality lower bounds, restriction-stability thresholds, and the
surface criteria, pinned against hand-computed values."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvebounds.blowup import CurveGeometry
from curvebounds.bounds import (
    barth_check,
    c2plus2_check,
    certify_restriction_stable,
    ci_curve_check,
    gamma_lower,
    gonality_bound,
    gonality_bound_general_r,
    linked_line_claim_gap,
    pencil_degree_bound_subvariety,
    restriction_threshold,
    surface_restriction_checks,
    trivial_lemma_check,
)
from curvebounds.errors import (
    IncompatibleRadicand,
    NoEvidence,
    NonpositiveEpsilon,
    NonpositiveGamma,
    NullCorrelationExcluded,
    UnsupportedDimension,
)
from curvebounds.scalar import QuadNumber, quad_cmp
from curvebounds.seshadri import combine, complete_intersection

F = Fraction

LINE = CurveGeometry(d=1, g=0)
CUBIC = CurveGeometry(d=3, g=0)
CI22 = CurveGeometry(d=4, g=1)
CI32 = CurveGeometry(d=6, g=4)
CI52 = CurveGeometry(d=10, g=16)
CI63 = CurveGeometry(d=18, g=46)
CI85 = CurveGeometry(d=40, g=181)
CI504 = CurveGeometry(d=200, g=5001)
LL52 = CurveGeometry(d=9, g=12)
LL73 = CurveGeometry(d=20, g=57)


# -- gonality bound: frozen values -------------------------------------------

GONALITY_CASES = [
    # curve, eta, value, ceiling
    (LINE, F(1), QuadNumber(0), 0),
    (CUBIC, F(1, 2), QuadNumber(-15, 9, 3), 1),
    (CI22, F(1, 2), QuadNumber(0), 0),
    (CI32, F(1, 3), QuadNumber(-42, 18, 6), 3),
    (CI52, F(1, 5), QuadNumber(5), 5),
    (CI63, F(1, 6), QuadNumber(12), 12),
    (CI85, F(1, 8), QuadNumber(32), 32),
    (CI504, F(1, 50), QuadNumber(150), 150),
    (LL52, F(1, 5), QuadNumber(F(13, 4)), 4),
    (LL73, F(1, 8), QuadNumber(8), 8),
]


@pytest.mark.parametrize("c,eta,value,ceiling", GONALITY_CASES)
def test_gonality_values(c, eta, value, ceiling):
    rep = gonality_bound(c, eta)
    assert rep.value == value
    assert rep.value_ceiling == ceiling


def test_gonality_report_details_quintic_quadric():
    rep = gonality_bound(CI52, F(1, 5))
    assert rep.term_delta == 5
    assert rep.alpha == 1
    assert rep.term_alpha == 5
    assert rep.inputs == {"d": 10, "g": 16, "r": 3, "eta": F(1, 5)}
    assert "delta = eta*deg_N - d = 4" in rep.trace
    assert rep.discrepancies == ()


def test_gonality_report_details_cubic():
    rep = gonality_bound(CUBIC, F(1, 2))
    assert rep.term_delta == 1
    assert rep.alpha == QuadNumber(F(-3, 2), 1, 3)
    assert rep.term_alpha == QuadNumber(-15, 9, 3)


@pytest.mark.parametrize("b", range(2, 6))
def test_gonality_matches_pencil_degree_for_spread_types(b):
    # alpha saturates at 1 once a >= b + 3, and the delta term never
    # undercuts a(b-1), so the bound is exactly the pencil degree
    for a in range(b + 3, 13):
        c = CurveGeometry(d=a * b, g=a * b * (a + b - 4) // 2 + 1)
        rep = gonality_bound(c, F(1, a))
        assert rep.value == a * (b - 1)
        assert rep.term_delta == F(a * b * b, 4)
        assert rep.term_delta >= a * (b - 1)


@pytest.mark.parametrize("a", range(2, 9))
def test_gonality_vanishes_on_balanced_types(a):
    c = CurveGeometry(d=a * a, g=a * a * (2 * a - 4) // 2 + 1)
    rep = gonality_bound(c, F(1, a))
    assert rep.value == 0
    assert rep.alpha == 0


def test_gonality_input_validation():
    with pytest.raises(NonpositiveEpsilon):
        gonality_bound(CI52, 0)
    with pytest.raises(NonpositiveEpsilon):
        gonality_bound(CI52, F(-1, 5))
    with pytest.raises(UnsupportedDimension):
        gonality_bound(CurveGeometry(d=8, g=5, r=4), F(1, 4))


def test_gonality_interval_warning():
    iv = combine(CI52, [complete_intersection(5, 2)])
    rep = gonality_bound(CI52, F(1, 4), interval=iv)
    assert any("outside the certified interval" in t for t in rep.trace)
    rep = gonality_bound(CI52, F(1, 5), interval=iv)
    assert not any("outside" in t for t in rep.trace)


def test_reports_are_deterministic():
    assert gonality_bound(CI52, F(1, 5)) == gonality_bound(CI52, F(1, 5))
    assert restriction_threshold(LL73, F(1, 8)) == restriction_threshold(LL73, F(1, 8))


@given(st.integers(min_value=2, max_value=40),
       st.integers(min_value=0, max_value=40),
       st.integers(min_value=0, max_value=40),
       st.fractions(min_value=F(1, 30), max_value=1, max_denominator=30))
def test_gonality_monotone_in_genus(d, g, extra, eta):
    lo = gonality_bound(CurveGeometry(d=d, g=g), eta)
    hi = gonality_bound(CurveGeometry(d=d, g=g + extra), eta)
    # only the delta term depends on g, and it grows with deg_N
    assert quad_cmp(lo.value, hi.value) <= 0


# -- restriction threshold: frozen values -------------------------------------

RESTRICTION_CASES = [
    (LINE, F(1), QuadNumber(0), 0),
    (CUBIC, F(1, 2), QuadNumber(0), 0),
    (CI22, F(1, 2), QuadNumber(0), 0),
    (CI32, F(1, 3), QuadNumber(F(-25, 2), 9, 2), 1),
    (CI52, F(1, 5), QuadNumber(F(-31, 2), 3, 30), 1),
    (CI63, F(1, 6), QuadNumber(F(-63, 2), F(27, 2), 6), 2),
    (CI85, F(1, 8), QuadNumber(-80, 15, 30), 3),
    (CI504, F(1, 50), QuadNumber(3), 3),
    (LL52, F(1, 5), QuadNumber(F(13, 20)), 1),
    (LL73, F(1, 8), QuadNumber(1), 1),
]


@pytest.mark.parametrize("c,gamma,value,ceiling", RESTRICTION_CASES)
def test_restriction_values(c, gamma, value, ceiling):
    rep = restriction_threshold(c, gamma)
    assert rep.value == value
    assert rep.value_ceiling == ceiling


def test_restriction_report_details():
    rep = restriction_threshold(CI504, F(1, 50))
    assert rep.term_delta == 4
    assert rep.alpha == 1
    assert rep.term_alpha == 3
    rep = restriction_threshold(LINE, 1)
    assert rep.alpha == 0
    assert any("clamped to 0" in t for t in rep.trace)


def test_restriction_input_validation():
    with pytest.raises(NonpositiveGamma):
        restriction_threshold(CI52, 0)
    with pytest.raises(UnsupportedDimension):
        restriction_threshold(CurveGeometry(d=8, g=5, r=4), F(1, 4))


@given(st.integers(min_value=2, max_value=40),
       st.integers(min_value=0, max_value=40),
       st.integers(min_value=0, max_value=40),
       st.fractions(min_value=F(1, 30), max_value=1, max_denominator=30))
def test_restriction_monotone_in_genus(d, g, extra, gamma):
    lo = restriction_threshold(CurveGeometry(d=d, g=g), gamma)
    hi = restriction_threshold(CurveGeometry(d=d, g=g + extra), gamma)
    assert quad_cmp(lo.value, hi.value) <= 0


# -- certification ------------------------------------------------------------


def test_certify_strictly_below_threshold():
    res = certify_restriction_stable(CI504, F(1, 50), 2)
    assert res.certified and res.verdict == "certified"
    assert "strict" in res.reason


def test_certify_at_threshold_is_inconclusive():
    # the threshold is exactly 3: equality must not certify
    res = certify_restriction_stable(CI504, F(1, 50), 3)
    assert not res.certified and res.verdict == "inconclusive"


def test_certify_zero_threshold_never_certifies():
    res = certify_restriction_stable(CUBIC, F(1, 2), 0)
    assert not res.certified


def test_certify_antitone_in_c2():
    verdicts = [certify_restriction_stable(CI504, F(1, 50), c2).certified
                for c2 in range(6)]
    assert verdicts == sorted(verdicts, reverse=True)
    assert verdicts == [True, True, True, False, False, False]


# -- the two-convention evaluation for higher-dimensional ambients -------------


def test_general_r_reduces_to_the_certified_bound_at_r3():
    rep = gonality_bound_general_r(CI52, F(1, 5))
    direct = gonality_bound(CI52, F(1, 5))
    assert rep.certified
    assert rep.discrepancies == ()
    assert rep.compact.value == rep.segre.value == direct.value
    assert rep.compact.value_ceiling == direct.value_ceiling


def test_general_r4_reports_both_conventions_uncertified():
    c4 = CurveGeometry(d=8, g=5, r=4)
    rep = gonality_bound_general_r(c4, F(1, 4))
    assert not rep.certified
    assert rep.compact.term_delta == 4
    assert rep.segre.term_delta == -4
    assert rep.compact.value == QuadNumber(-40, 24, 2)
    assert rep.segre.value == QuadNumber(-40, 24, 2)
    assert rep.compact.value_ceiling == -6
    assert len(rep.discrepancies) == 1
    disc = rep.discrepancies[0]
    assert disc.code == "delta-convention-mismatch"
    assert disc.data["delta_compact"] == 1
    assert disc.data["delta_segre"] == -1


def test_general_r_alpha_clamps_to_zero():
    c4 = CurveGeometry(d=2, g=0, r=4)
    rep = gonality_bound_general_r(c4, 1)
    assert rep.compact.alpha == 0
    assert rep.compact.value == 0
    assert not rep.certified


def test_general_r_rejects_nonpositive_eta():
    with pytest.raises(NonpositiveEpsilon):
        gonality_bound_general_r(CI52, 0)


# -- pencil bound on a subvariety ---------------------------------------------


def test_pencil_bound_reduces_to_gonality_for_curves():
    rep = pencil_degree_bound_subvariety(10, 70, 1, F(1, 5), 3)
    direct = gonality_bound(CI52, F(1, 5))
    assert rep.value == direct.value == 5
    assert rep.term_delta == direct.term_delta
    assert rep.term_alpha == direct.term_alpha


@given(st.integers(min_value=1, max_value=30),
       st.integers(min_value=0, max_value=30),
       st.fractions(min_value=F(1, 20), max_value=2, max_denominator=20))
def test_pencil_bound_reduction_is_exact(d, g, eps):
    c = CurveGeometry(d=d, g=g)
    rep = pencil_degree_bound_subvariety(d, c.deg_n, 1, eps, 3)
    direct = gonality_bound(c, eps)
    assert rep.value == direct.value
    assert rep.value_ceiling == direct.value_ceiling


def test_pencil_bound_on_a_surface():
    # degree-6 surface in P^3 with c1(N).H = 30 at eps = 1/4:
    # delta = (30 + 6)/4 - 6 = 3, alpha = sqrt(6) - 3/2,
    # min(3, 18*sqrt(6) - 42) is the alpha term
    rep = pencil_degree_bound_subvariety(6, 30, 2, F(1, 4), 3)
    assert rep.term_delta == 3
    assert rep.value == QuadNumber(-42, 18, 6)
    assert rep.value_ceiling == 3


def test_pencil_bound_validation():
    with pytest.raises(ValueError):
        pencil_degree_bound_subvariety(0, 70, 1, F(1, 5), 3)
    with pytest.raises(ValueError):
        pencil_degree_bound_subvariety(10, 70, 0, F(1, 5), 3)
    with pytest.raises(ValueError):
        pencil_degree_bound_subvariety(10, 70, 1, F(1, 5), 2)
    with pytest.raises(NonpositiveEpsilon):
        pencil_degree_bound_subvariety(10, 70, 1, 0, 3)


# -- stability constant from surfaces ------------------------------------------


def test_gamma_lower_from_one_surface():
    iv = combine(CI52, [complete_intersection(5, 2)])
    sc = gamma_lower(CI52, [(5, True)], iv)
    assert sc.gamma_lower == F(1, 5)
    assert any("degree 5" in t for t in sc.trace)


def test_gamma_lower_picks_the_best_stable_surface():
    iv = combine(CI52, [complete_intersection(5, 2)])
    sc = gamma_lower(CI52, [(3, False), (7, True), (9, True)], iv)
    assert sc.gamma_lower == F(1, 7)
    assert any("skipped" in t for t in sc.trace)


def test_gamma_lower_needs_a_stable_surface():
    iv = combine(CI52, [complete_intersection(5, 2)])
    with pytest.raises(NoEvidence):
        gamma_lower(CI52, [(3, False)], iv)
    with pytest.raises(ValueError):
        gamma_lower(CI52, [(0, True)], iv)


# -- surface/CI-curve restriction criteria -------------------------------------


def test_barth_criterion():
    assert barth_check(5, 2)
    assert not barth_check(4, 2)
    with pytest.raises(NullCorrelationExcluded):
        barth_check(10, 1)


def test_c2_plus_2_criterion():
    assert c2plus2_check(4, 2)
    assert not c2plus2_check(3, 2)


def test_ci_curve_criterion():
    assert ci_curve_check(10, 4, 2)
    assert not ci_curve_check(8, 4, 2)      # needs a >= 26/3
    assert not ci_curve_check(10, 4, 9)     # needs b >= c2 + 2


def test_surface_restriction_dispatch():
    assert surface_restriction_checks("barth", 2, a=5)
    assert surface_restriction_checks("c2plus2", 2, b=4)
    assert surface_restriction_checks("ci_curve", 2, a=10, b=4)
    with pytest.raises(ValueError):
        surface_restriction_checks("barth", 2)
    with pytest.raises(ValueError):
        surface_restriction_checks("ci_curve", 2, a=10)
    with pytest.raises(ValueError):
        surface_restriction_checks("hodge", 2, a=10)


# -- the elementary slope implication ------------------------------------------


def test_trivial_lemma_concrete():
    assert trivial_lemma_check(2, 1, 5, 7)
    # failed premise: vacuously true
    assert trivial_lemma_check(0, 1, 5, -100)
    root2 = QuadNumber(0, 1, 2)
    assert trivial_lemma_check(root2, root2 - 1, 3 * root2, 2 * root2)


def test_trivial_lemma_rejects_mixed_radicands():
    with pytest.raises(IncompatibleRadicand):
        trivial_lemma_check(QuadNumber(0, 1, 2), QuadNumber(0, 1, 3), 1, 1)


small = st.fractions(min_value=-20, max_value=20, max_denominator=16)


@given(small, small, small, small)
def test_trivial_lemma_is_a_tautology_over_rationals(s, alpha, a, b):
    assert trivial_lemma_check(s, alpha, a, b)


@given(small, small, small, small, st.integers(min_value=0, max_value=30))
def test_trivial_lemma_is_a_tautology_over_quadratics(p, q, r, w, m):
    vals = [QuadNumber(p, q, m), QuadNumber(q, r, m),
            QuadNumber(r, w, m), QuadNumber(w, p, m)]
    assert trivial_lemma_check(*vals)


# -- sharpness gap for curves linked to a line ---------------------------------


def test_linked_line_gap_is_reported():
    disc = linked_line_claim_gap(5, 2)
    assert disc is not None
    assert disc.code == "linked-line-pencil-gap"
    assert disc.data["pencil_degree"] == 4
    assert disc.data["bound_value"] == F(13, 4)
    assert disc.data["bound_ceiling"] == 4

    disc = linked_line_claim_gap(7, 3)
    assert disc.data["pencil_degree"] == 12
    assert disc.data["bound_value"] == 8


def test_linked_line_gap_absent_in_the_degenerate_case():
    # type (2,1) links the line to itself: bound 0, pencil degree 0
    assert linked_line_claim_gap(2, 1) is None
