"""Exact evaluation of the two main numeric bounds for a smooth space
curve, with full step-by-step traces:

* a lower bound on the gonality,
      gon(C) >= min{ delta_eta/(4 eta), alpha (d - alpha/eta) },
  with alpha = min{1, sqrt(d)(1 - eta sqrt(d))} clamped at 0, and

* a threshold on c_2 below which restriction of a stable rank-two
  bundle (c_1 = 0) to the curve stays stable,
      c_2 < min{ delta_gamma/4, alpha gamma d - alpha^2 },
  with alpha = min{1, sqrt(3d)/2 - gamma d} clamped at 0.

Everything is computed in Q(sqrt(m)) with exact comparisons; ceilings
are certified integers.  The general-r gonality variant evaluates both
delta conventions side by side and flags disagreements; only r = 3 is
certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .blowup import (
    CurveGeometry,
    delta_eta,
    delta_eta_compact,
    delta_eta_segre,
)
from .errors import (
    NoEvidence,
    NonpositiveEpsilon,
    NonpositiveGamma,
    NullCorrelationExcluded,
    UnsupportedDimension,
)
from .scalar import (
    QuadNumber,
    QuadLike,
    RationalLike,
    ceil_quad,
    quad_cmp,
    quad_min,
    sqrt_rational,
)
from .seshadri import SeshadriInterval


@dataclass(frozen=True)
class Discrepancy:
    """A structured warning: two quantities that a sharpness claim or a
    convention choice says should agree, but do not."""

    code: str
    message: str
    data: dict


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: the two competing terms, their minimum, a
    certified integer ceiling, and the evaluation trace."""

    inputs: dict
    alpha: QuadNumber
    term_delta: Fraction
    term_alpha: QuadNumber
    value: QuadNumber
    value_ceiling: int
    trace: tuple[str, ...]
    discrepancies: tuple[Discrepancy, ...] = ()


@dataclass(frozen=True)
class GeneralRGonalityReport:
    """Side-by-side evaluation of the gonality bound for r >= 3 under
    the two delta conventions; certified only when they are the same
    (always at r = 3)."""

    compact: BoundReport
    segre: BoundReport
    certified: bool
    discrepancies: tuple[Discrepancy, ...] = ()


@dataclass(frozen=True)
class StabilityConstant:
    """A certified lower bound on the stability constant gamma, from
    surfaces through the curve on which the bundle restricts stably."""

    gamma_lower: Fraction
    trace: tuple[str, ...]


@dataclass(frozen=True)
class CertificationResult:
    """Outcome of comparing c2 against the restriction threshold."""

    verdict: str  # "certified" | "inconclusive"
    c2: int
    report: BoundReport
    reason: str

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"


def _clamped_alpha(raw: QuadNumber, trace: list[str], formula: str) -> QuadNumber:
    one = QuadNumber(1)
    if raw.sign() < 0:
        trace.append(f"alpha = {formula} clamped to 0 (raw value {raw} < 0)")
        return QuadNumber(0)
    alpha = quad_min(one, raw)
    trace.append(f"alpha = min(1, {formula}) = {alpha}")
    return alpha


def _interval_warning(eps: Fraction, interval: Optional[SeshadriInterval],
                      name: str, trace: list[str]) -> None:
    if interval is None:
        return
    if eps < interval.lower or quad_cmp(eps, interval.upper) > 0:
        trace.append(
            f"warning: {name} = {eps} lies outside the certified interval "
            f"[{interval.lower}, {interval.upper}]; the bound is hypothetical")


def gonality_bound(c: CurveGeometry, eps: RationalLike,
                   interval: Optional[SeshadriInterval] = None) -> BoundReport:
    """Lower bound for the gonality of a smooth curve in P^3, evaluated
    at eta = eps.  Valid when eps is at most the Seshadri constant of
    the curve; pass the certified interval to get a trace warning when
    eps falls outside it."""
    if c.r != 3:
        raise UnsupportedDimension(f"gonality bound is certified for r = 3, got r = {c.r}")
    eps = Fraction(eps)
    if eps <= 0:
        raise NonpositiveEpsilon(f"eta must be positive, got {eps}")

    trace: list[str] = [
        f"inputs: d = {c.d}, g = {c.g}, r = 3, eta = {eps}",
        f"deg_N = (r+1)d + 2g - 2 = {c.deg_n}",
    ]
    _interval_warning(eps, interval, "eta", trace)

    delta = delta_eta(c, eps)
    trace.append(f"delta = eta*deg_N - d = {delta}")
    term_delta = delta / (4 * eps)
    trace.append(f"delta term: delta/(4*eta) = {term_delta}")

    sqrt_d = sqrt_rational(c.d)
    raw_alpha = sqrt_d - eps * c.d
    alpha = _clamped_alpha(raw_alpha, trace, f"sqrt({c.d}) - eta*d")
    term_alpha = alpha * (c.d - alpha / eps)
    trace.append(f"alpha term: alpha*(d - alpha/eta) = {term_alpha}")

    value = quad_min(QuadNumber(term_delta), term_alpha)
    ceiling = ceil_quad(value)
    trace.append(f"value = min of the two terms = {value}; "
                 f"smallest integer >= value: {ceiling}")

    return BoundReport(
        inputs={"d": c.d, "g": c.g, "r": c.r, "eta": eps},
        alpha=alpha,
        term_delta=term_delta,
        term_alpha=term_alpha,
        value=value,
        value_ceiling=ceiling,
        trace=tuple(trace),
    )


def _general_r_report(c: CurveGeometry, eps: Fraction, delta: Fraction,
                      convention: str) -> BoundReport:
    trace: list[str] = [
        f"inputs: d = {c.d}, g = {c.g}, r = {c.r}, eta = {eps}",
        f"deg_N = (r+1)d + 2g - 2 = {c.deg_n}",
        f"delta ({convention} convention) = {delta}",
    ]
    eps_pow = eps ** (c.r - 2)
    term_delta = delta / (4 * eps_pow)
    trace.append(f"delta term: delta/(4*eta^(r-2)) = {term_delta}")

    radicand = eps ** (c.r - 3) * c.d
    root = sqrt_rational(radicand)
    raw_alpha = root - eps_pow * c.d
    alpha = _clamped_alpha(
        raw_alpha, trace, f"sqrt(eta^(r-3)*d) - eta^(r-2)*d")
    term_alpha = alpha * (c.d - alpha / eps_pow)
    trace.append(f"alpha term: alpha*(d - alpha/eta^(r-2)) = {term_alpha}")

    value = quad_min(QuadNumber(term_delta), term_alpha)
    ceiling = ceil_quad(value)
    trace.append(f"value = min of the two terms = {value}; "
                 f"smallest integer >= value: {ceiling}")
    return BoundReport(
        inputs={"d": c.d, "g": c.g, "r": c.r, "eta": eps,
                "delta_convention": convention},
        alpha=alpha,
        term_delta=term_delta,
        term_alpha=term_alpha,
        value=value,
        value_ceiling=ceiling,
        trace=tuple(trace),
    )


def gonality_bound_general_r(c: CurveGeometry, eps: RationalLike) -> GeneralRGonalityReport:
    """Gonality bound for a curve in P^r, r >= 3, evaluated under BOTH
    delta conventions (the compact eta^(r-3)(eta deg_N - d) form and
    the intersection-table form eta^(r-2) deg_N - (r-2) eta^(r-3) d).
    They agree at r = 3, where the result matches gonality_bound and is
    certified; for r > 3 a disagreement is flagged, not resolved."""
    eps = Fraction(eps)
    if eps <= 0:
        raise NonpositiveEpsilon(f"eta must be positive, got {eps}")

    d_compact = delta_eta_compact(c, eps)
    d_segre = delta_eta_segre(c, eps)
    compact = _general_r_report(c, eps, d_compact, "compact")
    segre = _general_r_report(c, eps, d_segre, "intersection-table")

    discrepancies: tuple[Discrepancy, ...] = ()
    if d_compact != d_segre:
        discrepancies = (Discrepancy(
            code="delta-convention-mismatch",
            message=(f"the two delta conventions disagree at r = {c.r}: "
                     f"compact {d_compact} vs intersection-table {d_segre}; "
                     "both bounds are reported, neither is certified"),
            data={"delta_compact": d_compact, "delta_segre": d_segre,
                  "term_delta_compact": compact.term_delta,
                  "term_delta_segre": segre.term_delta},
        ),)
    return GeneralRGonalityReport(
        compact=compact,
        segre=segre,
        certified=(c.r == 3),
        discrepancies=discrepancies,
    )


def pencil_degree_bound_subvariety(x_degree: RationalLike, deg_n_dot: RationalLike,
                                   n: int, eps: RationalLike, r: int) -> BoundReport:
    """Degree bound for a member of a pencil with small base locus on an
    n-dimensional subvariety of P^r of degree x_degree, given the
    normal-bundle product c1(N).H^(n-1) and a Seshadri lower bound eps.
    Formula evaluator only; for n = 1, r = 3 it reduces exactly to
    gonality_bound with deg_N = deg_n_dot."""
    d = Fraction(x_degree)
    deg_n_dot = Fraction(deg_n_dot)
    eps = Fraction(eps)
    if d <= 0 or deg_n_dot <= 0 or n < 1 or r < 3:
        raise ValueError("x_degree, deg_n_dot must be positive; n >= 1, r >= 3")
    if eps <= 0:
        raise NonpositiveEpsilon(f"eps must be positive, got {eps}")

    trace: list[str] = [
        f"inputs: deg X = {d}, c1(N).H^(n-1) = {deg_n_dot}, n = {n}, "
        f"r = {r}, eps = {eps}",
    ]
    eps_pow = eps ** (r - 2)
    delta = eps * (deg_n_dot + (n - 1) * d) - d
    trace.append(f"delta = eps*(c1(N).H^(n-1) + (n-1)d) - d = {delta}")
    term_delta = delta / (4 * eps_pow)
    trace.append(f"delta term: delta/(4*eps^(r-2)) = {term_delta}")

    radicand = eps ** (r - 3) * d
    raw_alpha = sqrt_rational(radicand) - eps_pow * d
    alpha = _clamped_alpha(raw_alpha, trace, "sqrt(eps^(r-3)*d) - eps^(r-2)*d")
    term_alpha = alpha * (d - alpha / eps_pow)
    trace.append(f"alpha term: alpha*(d - alpha/eps^(r-2)) = {term_alpha}")

    value = quad_min(QuadNumber(term_delta), term_alpha)
    ceiling = ceil_quad(value)
    trace.append(f"value = min of the two terms = {value}; "
                 f"smallest integer >= value: {ceiling}")
    return BoundReport(
        inputs={"x_degree": d, "deg_n_dot": deg_n_dot, "n": n, "r": r,
                "eps": eps},
        alpha=alpha,
        term_delta=term_delta,
        term_alpha=term_alpha,
        value=value,
        value_ceiling=ceiling,
        trace=tuple(trace),
    )


def gamma_lower(c: CurveGeometry, surfaces: list[tuple[int, bool]],
                eps_interval: SeshadriInterval) -> StabilityConstant:
    """Lower bound for the stability constant from surfaces through the
    curve: each surface of degree a on which the bundle restricts
    stably certifies gamma >= min(1/a, eps_lower); the best one wins.

    Raises NoEvidence when no surface qualifies (the constant is then
    still positive, but no effective value is certified here)."""
    trace: list[str] = [f"eps lower bound: {eps_interval.lower}"]
    best: Optional[Fraction] = None
    for degree, stable in surfaces:
        if degree <= 0:
            raise ValueError(f"surface degree must be positive, got {degree}")
        if not stable:
            trace.append(f"surface of degree {degree}: restriction not known "
                         "stable, skipped")
            continue
        contrib = min(Fraction(1, degree), eps_interval.lower)
        trace.append(f"surface of degree {degree}: stable restriction gives "
                     f"gamma >= min(1/{degree}, {eps_interval.lower}) = {contrib}")
        if best is None or contrib > best:
            best = contrib
    if best is None:
        raise NoEvidence(
            "no surface with a stable restriction; gamma is positive but "
            "unquantified")
    trace.append(f"gamma >= {best}")
    return StabilityConstant(gamma_lower=best, trace=tuple(trace))


def restriction_threshold(c: CurveGeometry, gamma: RationalLike,
                          interval: Optional[SeshadriInterval] = None) -> BoundReport:
    """Threshold on c2: a stable rank-two bundle on P^3 with c1 = 0 and
    c2 strictly below this value restricts stably to the curve.  Valid
    when gamma is at most the stability constant of the pair."""
    if c.r != 3:
        raise UnsupportedDimension(
            f"restriction threshold is certified for r = 3, got r = {c.r}")
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise NonpositiveGamma(f"gamma must be positive, got {gamma}")

    trace: list[str] = [
        f"inputs: d = {c.d}, g = {c.g}, r = 3, gamma = {gamma}",
        f"deg_N = (r+1)d + 2g - 2 = {c.deg_n}",
    ]
    _interval_warning(gamma, interval, "gamma", trace)

    delta = delta_eta(c, gamma)
    trace.append(f"delta = gamma*deg_N - d = {delta}")
    term_delta = delta / 4
    trace.append(f"delta term: delta/4 = {term_delta}")

    # sqrt(d)*sqrt(3/4) = sqrt(3d)/2, so alpha lives in Q(sqrt(3d))
    root = sqrt_rational(3 * c.d) / 2
    raw_alpha = root - gamma * c.d
    alpha = _clamped_alpha(raw_alpha, trace, f"sqrt(3*{c.d})/2 - gamma*d")
    term_alpha = alpha * gamma * c.d - alpha * alpha
    trace.append(f"alpha term: alpha*gamma*d - alpha^2 = {term_alpha}")

    value = quad_min(QuadNumber(term_delta), term_alpha)
    ceiling = ceil_quad(value)
    trace.append(f"value = min of the two terms = {value}; "
                 f"smallest integer >= value: {ceiling}")

    return BoundReport(
        inputs={"d": c.d, "g": c.g, "r": c.r, "gamma": gamma},
        alpha=alpha,
        term_delta=term_delta,
        term_alpha=term_alpha,
        value=value,
        value_ceiling=ceiling,
        trace=tuple(trace),
    )


def certify_restriction_stable(c: CurveGeometry, gamma: RationalLike, c2: int,
                               interval: Optional[SeshadriInterval] = None,
                               ) -> CertificationResult:
    """Certified iff c2 < restriction_threshold value, strictly and
    exactly.  The bundle is assumed stable on P^3 with c1 = 0."""
    report = restriction_threshold(c, gamma, interval)
    if quad_cmp(Fraction(c2), report.value) < 0:
        return CertificationResult(
            verdict="certified", c2=c2, report=report,
            reason=f"c2 = {c2} < threshold {report.value} (strict)")
    return CertificationResult(
        verdict="inconclusive", c2=c2, report=report,
        reason=f"c2 = {c2} is not strictly below threshold {report.value}")


def barth_check(a: int, c2: int) -> bool:
    """Restriction to a general degree-a surface stays stable when
    a > 2*c2, provided c2 != 1 (the null-correlation case is excluded)."""
    if c2 == 1:
        raise NullCorrelationExcluded(
            "c2 = 1 is excluded from the generic-surface criterion")
    return a > 2 * c2


def c2plus2_check(b: int, c2: int) -> bool:
    """Restriction to a general degree-b surface stays stable when
    b >= c2 + 2."""
    return b >= c2 + 2


def ci_curve_check(a: int, b: int, c2: int) -> bool:
    """Restriction to a general complete-intersection curve of type
    (a, b) stays stable when a >= 4b/3 + 10/3 and b >= c2 + 2."""
    return Fraction(a) >= Fraction(4 * b + 10, 3) and b >= c2 + 2


def surface_restriction_checks(variant: str, c2: int, *,
                               a: Optional[int] = None,
                               b: Optional[int] = None) -> bool:
    """Dispatch to one of the three restriction criteria: "barth"
    (needs a), "c2plus2" (needs b), "ci_curve" (needs a and b)."""
    if variant == "barth":
        if a is None:
            raise ValueError("barth variant needs a surface degree a")
        return barth_check(a, c2)
    if variant == "c2plus2":
        if b is None:
            raise ValueError("c2plus2 variant needs a surface degree b")
        return c2plus2_check(b, c2)
    if variant == "ci_curve":
        if a is None or b is None:
            raise ValueError("ci_curve variant needs both degrees a and b")
        return ci_curve_check(a, b, c2)
    raise ValueError(f"unknown variant: {variant!r}")


def trivial_lemma_check(s: QuadLike, alpha: QuadLike, a: QuadLike,
                        b: QuadLike) -> bool:
    """Truth of the implication
        (s >= alpha and a >= 2s and b >= a*s - s^2)  =>  b >= a*alpha - alpha^2.
    Vacuously true when a premise fails.  All four operands must share
    a radicand (IncompatibleRadicand otherwise)."""
    s, alpha, a, b = (QuadNumber(v) if not isinstance(v, QuadNumber) else v
                      for v in (s, alpha, a, b))
    premises = (s >= alpha) and (a >= 2 * s) and (b >= a * s - s * s)
    if not premises:
        return True
    return b >= a * alpha - alpha * alpha


def linked_line_claim_gap(a: int, b: int) -> Optional[Discrepancy]:
    """For a curve linked to a line by surfaces of type (a, b), compare
    the gonality bound with the residual-pencil degree (a-1)(b-1).  The
    bound falls short; the gap is reported as a structured warning."""
    d = a * b - 1
    g = (a + b - 4) * (a * b - 2) // 2
    c = CurveGeometry(d=d, g=g)
    eps = Fraction(1, a + b - 2)
    report = gonality_bound(c, eps)
    pencil = (a - 1) * (b - 1)
    if quad_cmp(report.value, Fraction(pencil)) >= 0:
        return None
    return Discrepancy(
        code="linked-line-pencil-gap",
        message=(f"for the curve linked to a line by type ({a}, {b}) surfaces, "
                 f"the bound value {report.value} (ceiling {report.value_ceiling}) "
                 f"is below the residual-pencil degree (a-1)(b-1) = {pencil}; "
                 "the bound is not sharp for this family"),
        data={"bound_value": report.value,
              "bound_ceiling": report.value_ceiling,
              "pencil_degree": pencil},
    )
