"""Exception taxonomy shared by every module.

All library errors derive from :class:`CurveBoundsError` so callers can
catch the whole family at once.  Names follow the failure they report,
not the call site that raises them.
"""

from __future__ import annotations


class CurveBoundsError(Exception):
    """Base class for every error raised by this package."""


# --- scalar arithmetic -------------------------------------------------

class IncompatibleRadicand(CurveBoundsError):
    """Arithmetic or comparison mixing two distinct irrational radicands."""


class NegativeRadicand(CurveBoundsError):
    """Square root requested of a negative rational."""


# --- intersection ring -------------------------------------------------

class UnsupportedDimension(CurveBoundsError):
    """Operation only defined for ambient dimension r = 3."""


class ArityMismatch(CurveBoundsError):
    """Top product called with a number of classes different from r."""


# --- evidence / intervals ---------------------------------------------

class EvidenceInconsistentWithDegree(CurveBoundsError):
    """Evidence parameters contradict the curve's degree or genus data."""


class InconsistentEvidence(CurveBoundsError):
    """Combined evidence produces an empty interval (lower > upper)."""


class DegenerateInput(CurveBoundsError):
    """Curve data outside the domain of the requested default (e.g. d <= 1)."""


# --- theorem evaluation -------------------------------------------------

class NonpositiveEpsilon(CurveBoundsError):
    """Gonality bound evaluated at eps <= 0."""


class NonpositiveGamma(CurveBoundsError):
    """Restriction threshold evaluated at gamma <= 0."""


class NoEvidence(CurveBoundsError):
    """No qualifying surface: the stability constant is positive but
    unquantified, so no effective lower bound can be reported."""


class NullCorrelationExcluded(CurveBoundsError):
    """The Barth-based surface check requires c2 != 1."""


# --- replay -------------------------------------------------------------

class LambdaNegative(CurveBoundsError):
    """lambda_eta < 0: the quadratic-form step behind the constraint
    system does not apply, so no system is built."""


class NonpositiveEta(CurveBoundsError):
    """Constraint system requested at eta <= 0."""


class UnboundedBox(CurveBoundsError):
    """eta^2 * d >= 1: the derived enclosing box is unbounded, so
    exhaustive search is impossible."""


# --- descriptors ----------------------------------------------------------

class ParseError(CurveBoundsError):
    """Malformed descriptor document; the message carries a location."""


class InvariantViolation(CurveBoundsError):
    """Descriptor parsed but violates a structural invariant."""
