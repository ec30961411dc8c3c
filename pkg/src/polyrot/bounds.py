"""Lower and upper bounds for the boundary rotation of a polynomial.

All lower bounds are stated for the normalized excess rotation

    lambda(theta) = 2 (arg P(e^{i theta}))'_theta - n,

which is nonnegative whenever every zero of P lies in the closed unit
disk.  Each bound function returns the right-hand side on that scale;
`full_report` evaluates all of them at one boundary point, gates each by
its hypothesis, and records signed margins and pass flags.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisViolated, ZeroProximity
from .oracle import ArcSpec, arc_increment
from .poly import ZERO_PROXIMITY_REL, Polynomial, UnitCirclePoint, rotation_speed
from .report import BOUND_KEYS
from .roots import RootSolveConfig, ZeroClassification, classify_zeros

# Additive slack for inequality checks, relative to max(1, |lambda|):
# double precision cannot do better on rational coefficient expressions.
CHECK_SLACK = 1e-9

# Coefficient bound of the second kind degenerates at |c0| = |cn|; per its
# statement the bound is 0 there.
_EQUAL_MODULUS_REL = 1e-12


@dataclass(frozen=True)
class LambdaValue:
    """Excess rotation 2 (arg P)'_theta - n at one boundary point."""

    value: float


def lambda_at(p: Polynomial, pt: UnitCirclePoint) -> LambdaValue:
    """2 * rotation_speed - degree; raises ZeroProximity at zeros of P."""
    return LambdaValue(2.0 * rotation_speed(p, pt) - p.degree)


def bound_coeff(p: Polynomial) -> float:
    """Endpoint-coefficient lower bound (|cn| - |c0|) / (|cn| + |c0|).

    Valid (nonnegative) when all zeros lie in the closed disk; ranges in
    [0, 1] there, hitting 0 exactly when |c0| = |cn| and 1 when c0 = 0.
    """
    a0 = abs(p.constant)
    an = abs(p.leading)
    return (an - a0) / (an + a0)


def bound_sqrt_weak(p: Polynomial) -> float:
    """Weaker square-root variant 1 - sqrt(|c0| / |cn|), kept for comparison."""
    return 1.0 - math.sqrt(abs(p.constant) / abs(p.leading))


def bound_value(p: Polynomial, pt: UnitCirclePoint, lam: LambdaValue) -> float:
    """Value-refined lower bound |(lambda + 1) * conj(c0) P(z) / (cn z^n conj(P(z))) - 1|.

    Uses the boundary value of P itself, so it varies with theta; for
    zeros-in-disk inputs lambda dominates it.
    """
    z = pt.z
    val = p(z)
    if abs(val) < ZERO_PROXIMITY_REL * p.coeff_scale:
        raise ZeroProximity("boundary value too close to a zero of P")
    w = p.constant.conjugate() * val / (p.leading * z**p.degree * val.conjugate())
    return abs((lam.value + 1.0) * w - 1.0)


def bound_coeff2(p: Polynomial) -> float:
    """Second coefficient lower bound 2(|c0|-|cn|)^2 / (|cn|^2 - |c0|^2 + |conj(cn) c1 - c0 conj(c_{n-1})|).

    Returns 0 when |c0| = |cn| (all zeros on the circle), where the
    quotient formally degenerates.  Outside the zeros-in-disk hypothesis
    the denominator can vanish or turn negative; the result is then nan
    and the caller is expected to have gated the bound off.
    """
    c = p.coeffs
    a0 = abs(c[0])
    an = abs(c[-1])
    if abs(a0 - an) <= _EQUAL_MODULUS_REL * max(a0, an):
        return 0.0
    cross = abs(c[-1].conjugate() * c[1] - c[0] * c[-2].conjugate())
    denom = an * an - a0 * a0 + cross
    if denom <= 0.0:
        return math.nan
    return 2.0 * (a0 - an) ** 2 / denom


def bound_arc(
    p: Polynomial,
    pt: UnitCirclePoint,
    alpha: float,
    beta: float,
    n_samples: int = 4096,
    cfg: RootSolveConfig | None = None,
) -> float:
    """Finite-increment upper bound tan(beta/2) / tan(alpha/2) for lambda at pt.

    Hypotheses: the open arc of half-width alpha around pt is zero free,
    and the increment of 2 arg P(z) - n arg z along the arc is at most
    beta in absolute value.  The increment is measured and checked
    against the supplied beta.

    Raises HypothesisViolated when a zero lies on the open arc or the
    measured increment exceeds beta.
    """
    if not (0.0 < alpha < math.pi):
        raise ValueError("alpha must lie in (0, pi)")
    if not (0.0 < beta < math.pi):
        raise ValueError("beta must lie in (0, pi)")
    measured = arc_increment(p, ArcSpec(pt.theta, alpha, n_samples), cfg)
    if measured > beta + 1e-9:
        raise HypothesisViolated(
            f"measured arc increment {measured:.6f} exceeds the supplied beta {beta:.6f}"
        )
    return math.tan(0.5 * beta) / math.tan(0.5 * alpha)


def upper_bound_zero_free(
    p: Polynomial,
    pt: UnitCirclePoint,
    cfg: RootSolveConfig | None = None,
    classification: ZeroClassification | None = None,
) -> float:
    """Upper bound n/2 + (|cn| - |c0|) / (2(|cn| + |c0|)) on the rotation speed.

    Applies to polynomials with no zeros in the open unit disk (the
    reversed-conjugate polynomial then has all zeros in the closed disk,
    and the correction term is <= 0).
    """
    cls = classification or classify_zeros(p, cfg)
    if not cls.none_inside_open_disk:
        raise HypothesisViolated("polynomial has zeros inside the open unit disk")
    rotation_speed(p, pt)  # zero-proximity guard
    return 0.5 * p.degree + 0.5 * bound_coeff(p)


@dataclass(frozen=True)
class BoundReport:
    """Every applicable bound at one boundary point, with margins and flags.

    Margin conventions: lower bounds report lambda - bound, the two upper
    bounds report bound - lambda (arc) and bound - rotation speed
    (zero-free).  A flag is "pass" / "fail" for applicable bounds and
    "na" when the hypothesis does not hold or the bound was not requested.
    """

    theta: float
    lam: float
    bounds: dict
    margins: dict
    flags: dict

    @property
    def status(self) -> str:
        return "fail" if any(f == "fail" for f in self.flags.values()) else "pass"

    def as_dict(self) -> dict:
        return {
            "theta": self.theta,
            "lambda": self.lam,
            "bounds": {k: self.bounds.get(k) for k in BOUND_KEYS},
            "margins": {k: self.margins.get(k) for k in BOUND_KEYS},
            "flags": {k: self.flags.get(k, "na") for k in BOUND_KEYS},
            "status": self.status,
        }


def full_report(
    p: Polynomial,
    pt: UnitCirclePoint,
    arc: tuple[float, float | None] | None = None,
    cfg: RootSolveConfig | None = None,
    slack: float = CHECK_SLACK,
    classification: ZeroClassification | None = None,
) -> BoundReport:
    """Evaluate lambda and every applicable bound at one boundary point.

    Lower bounds apply when all zeros lie in the closed disk; the
    zero-free upper bound applies when none lie in the open disk.  The
    arc bound is only evaluated when `arc = (alpha, beta)` is supplied
    (beta = None means: use the measured increment).  Bounds whose
    hypothesis fails are reported with flag "na" rather than "fail".
    """
    cls = classification or classify_zeros(p, cfg)
    speed = rotation_speed(p, pt)
    lam = 2.0 * speed - p.degree
    tol = slack * max(1.0, abs(lam))

    bounds: dict = {}
    margins: dict = {}
    flags: dict = {}

    lower_ok = cls.all_in_closed_disk
    for key, value in (
        ("classic", 0.0),
        ("coeff", bound_coeff(p)),
        ("sqrt_weak", bound_sqrt_weak(p)),
        ("value_thm1", bound_value(p, pt, LambdaValue(lam))),
        ("coeff2_thm2", bound_coeff2(p)),
    ):
        bounds[key] = value
        if lower_ok and math.isfinite(value):
            margins[key] = lam - value
            flags[key] = "pass" if margins[key] >= -tol else "fail"
        else:
            margins[key] = None
            flags[key] = "na"

    bounds["arc_thm3"] = None
    margins["arc_thm3"] = None
    flags["arc_thm3"] = "na"
    if arc is not None:
        alpha, beta = arc
        try:
            measured = arc_increment(p, ArcSpec(pt.theta, alpha), cfg)
            use_beta = measured if beta is None else beta
            if use_beta < math.pi and measured <= use_beta + 1e-9:
                value = math.tan(0.5 * use_beta) / math.tan(0.5 * alpha)
                bounds["arc_thm3"] = value
                margins["arc_thm3"] = value - lam
                flags["arc_thm3"] = "pass" if margins["arc_thm3"] >= -tol else "fail"
        except HypothesisViolated:
            pass

    if cls.none_inside_open_disk:
        value = 0.5 * p.degree + 0.5 * bound_coeff(p)
        bounds["upper_zero_free"] = value
        margins["upper_zero_free"] = value - speed
        flags["upper_zero_free"] = "pass" if margins["upper_zero_free"] >= -tol else "fail"
    else:
        bounds["upper_zero_free"] = None
        margins["upper_zero_free"] = None
        flags["upper_zero_free"] = "na"

    return BoundReport(pt.theta, lam, bounds, margins, flags)
