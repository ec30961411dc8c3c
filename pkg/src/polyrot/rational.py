"""Rotation bounds for rational functions with poles outside the closed disk.

R(z) = P(z) / prod (z - a_k) with numerator degree m and |a_k| > 1.  The
reference object is the pole product B(z) = prod (1 - conj(a_k) z) / (z - a_k),
unimodular on |z| = 1 with strictly positive rotation speed there.  When
all m numerator zeros lie in the closed disk,

    (arg R)'_theta >= (m - n + (arg B)'_theta) / 2,

and the reverse holds when no zero lies in the open disk; the family
alpha B + beta with |alpha| = |beta| has all zeros on the circle and
attains both at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PoleOnCircle, ZeroProximity
from .poly import ZERO_PROXIMITY_REL, Polynomial, UnitCirclePoint, _horner_pair
from .roots import RootSolveConfig, classify_zeros

_POLE_CIRCLE_TOL = 1e-12


@dataclass(frozen=True)
class RationalFunction:
    """Numerator coefficients (ascending, degree m >= 0) plus poles with |a| > 1."""

    numerator: tuple[complex, ...]
    poles: tuple[complex, ...]

    def __init__(self, numerator, poles: Iterable[complex] = ()):
        if isinstance(numerator, Polynomial):
            num = numerator.coeffs
        else:
            num = tuple(complex(c) for c in numerator)
        if not num:
            raise ValueError("numerator needs at least one coefficient")
        scale = max(abs(c) for c in num)
        if scale == 0.0:
            raise ValueError("numerator must not be identically zero")
        if len(num) > 1 and abs(num[-1]) < 1e-13 * scale:
            raise ValueError("trailing numerator coefficient is (numerically) zero")
        ps = tuple(complex(a) for a in poles)
        for a in ps:
            if abs(a) <= 1.0 + _POLE_CIRCLE_TOL:
                raise ValueError(f"pole at |a| = {abs(a):.6f}; all poles must satisfy |a| > 1")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "poles", ps)

    @property
    def num_degree(self) -> int:
        return len(self.numerator) - 1

    def __call__(self, z: complex) -> complex:
        val, _ = _horner_pair(self.numerator, z)
        for a in self.poles:
            val /= z - a
        return val

    def to_json(self) -> dict:
        return {
            "numerator": [[c.real, c.imag] for c in self.numerator],
            "poles": [[a.real, a.imag] for a in self.poles],
        }

    @staticmethod
    def from_json(data: dict) -> "RationalFunction":
        num = (complex(re, im) for re, im in data["numerator"])
        ps = (complex(re, im) for re, im in data["poles"])
        return RationalFunction(num, ps)


class PoleBlaschke:
    """Evaluator for B(z) = prod (1 - conj(a_k) z) / (z - a_k) and its log derivative."""

    def __init__(self, poles: Sequence[complex]):
        self.poles = tuple(complex(a) for a in poles)

    def __call__(self, z: complex) -> complex:
        acc = 1.0 + 0j
        for a in self.poles:
            acc *= (1.0 - a.conjugate() * z) / (z - a)
        return acc

    def log_derivative(self, z: complex) -> complex:
        s = 0j
        for a in self.poles:
            s += -a.conjugate() / (1.0 - a.conjugate() * z) - 1.0 / (z - a)
        return s

    def arg_derivative(self, pt: UnitCirclePoint) -> float:
        """(arg B)'_theta = Re(z B'(z)/B(z)); equals sum (|a|^2 - 1)/|z - a|^2 on the circle."""
        z = pt.z
        return (z * self.log_derivative(z)).real


def blaschke_B(poles: Iterable[complex]) -> PoleBlaschke:
    """Pole product evaluator; rejects poles with |a| = 1.

    Poles on either side of the circle are accepted here (the product is
    defined for any |a| != 1), even though RationalFunction itself only
    allows exterior poles.
    """
    ps = tuple(complex(a) for a in poles)
    for a in ps:
        if abs(abs(a) - 1.0) <= _POLE_CIRCLE_TOL:
            raise PoleOnCircle(f"|a| = {abs(a):.12f}")
    return PoleBlaschke(ps)


def arg_derivative(r: RationalFunction, pt: UnitCirclePoint) -> float:
    """(arg R)'_theta = Re(z P'(z)/P(z)) - sum Re(z / (z - a_k)) at z = e^{i theta}."""
    z = pt.z
    val, der = _horner_pair(r.numerator, z)
    scale = max(abs(c) for c in r.numerator)
    if abs(val) < ZERO_PROXIMITY_REL * scale:
        raise ZeroProximity("boundary point too close to a zero of R")
    speed = (z * der / val).real if r.num_degree > 0 else 0.0
    for a in r.poles:
        speed -= (z / (z - a)).real
    return speed


@dataclass(frozen=True)
class RationalBoundReport:
    """Both halves of the rotation comparison against (m - n + (arg B)')/2."""

    theta: float
    value: float
    reference: float
    num_degree: int
    n_poles: int
    lower_applicable: bool
    upper_applicable: bool
    lower_margin: float | None
    upper_margin: float | None
    lower_pass: bool | None
    upper_pass: bool | None

    def as_dict(self) -> dict:
        return {
            "theta": self.theta,
            "value": self.value,
            "reference": self.reference,
            "m": self.num_degree,
            "n_poles": self.n_poles,
            "lower": {
                "applicable": self.lower_applicable,
                "margin": self.lower_margin,
                "passed": self.lower_pass,
            },
            "upper": {
                "applicable": self.upper_applicable,
                "margin": self.upper_margin,
                "passed": self.upper_pass,
            },
        }


def check_rotation_bounds(
    r: RationalFunction,
    pt: UnitCirclePoint,
    cfg: RootSolveConfig | None = None,
    tol: float = 1e-9,
) -> RationalBoundReport:
    """Check (arg R)' against (m - n + (arg B)')/2 in both directions.

    The lower inequality applies when all m numerator zeros lie in the
    closed unit disk, the upper one when none lie in the open disk; a
    constant numerator satisfies both vacuously.
    """
    value = arg_derivative(r, pt)
    reference = 0.5 * (
        r.num_degree - len(r.poles) + PoleBlaschke(r.poles).arg_derivative(pt)
    )
    if r.num_degree > 0:
        cls = classify_zeros(Polynomial(r.numerator), cfg)
        lower_ok = cls.all_in_closed_disk
        upper_ok = cls.none_inside_open_disk
    else:
        lower_ok = upper_ok = True
    check_tol = tol * max(1.0, abs(value), abs(reference))
    lower_margin = value - reference if lower_ok else None
    upper_margin = reference - value if upper_ok else None
    return RationalBoundReport(
        theta=pt.theta,
        value=value,
        reference=reference,
        num_degree=r.num_degree,
        n_poles=len(r.poles),
        lower_applicable=lower_ok,
        upper_applicable=upper_ok,
        lower_margin=lower_margin,
        upper_margin=upper_margin,
        lower_pass=None if lower_margin is None else lower_margin >= -check_tol,
        upper_pass=None if upper_margin is None else upper_margin >= -check_tol,
    )
