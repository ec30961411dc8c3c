"""Constructors for the equality families of each sharp bound.

Each constructor returns an input on which the corresponding inequality
is attained (at z = 1 for the two polynomial families, identically on
the circle for the rational family), so sharpness can be confirmed
numerically rather than taken on faith.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .blaschke import BlaschkeProduct
from .errors import InvalidWitnessParams
from .poly import RootForm, expand_monic
from .rational import RationalFunction

# Roots this close to z = 1 void the equality point.
_ONE_EXCLUSION = 1e-6


def _as_unimodular(roots: Iterable[complex]) -> tuple[complex, ...]:
    out = []
    for a in roots:
        a = complex(a)
        if abs(abs(a) - 1.0) > 1e-9:
            raise InvalidWitnessParams(f"|a| = {abs(a):.9f} is not unimodular")
        a /= abs(a)  # snap exactly onto the circle
        if abs(a - 1.0) < _ONE_EXCLUSION:
            raise InvalidWitnessParams("unimodular roots must stay away from z = 1")
        out.append(a)
    return tuple(out)


def witness_value(a: complex, unimodular_roots: Iterable[complex] = ()) -> RootForm:
    """(z - a) prod (z - a_k): equality case of the value-refined lower bound at z = 1.

    Requires |a| < 1 and unimodular a_k != 1.
    """
    a = complex(a)
    if abs(a) >= 1.0:
        raise InvalidWitnessParams("interior root must satisfy |a| < 1")
    return RootForm(1.0, (a,) + _as_unimodular(unimodular_roots))


def witness_arc(leading: complex, unimodular_roots: Iterable[complex] = ()) -> RootForm:
    """leading * z * prod (z - a_k): equality case of the arc bound at z = 1.

    With beta = alpha the bound equals 1, and the excess rotation at
    z = 1 is exactly 1.
    """
    leading = complex(leading)
    if abs(leading) == 0.0:
        raise InvalidWitnessParams("leading coefficient must be nonzero")
    return RootForm(leading, (0j,) + _as_unimodular(unimodular_roots))


def witness_goryainov(a: complex) -> BlaschkeProduct:
    """f*(z) = z (1 - conj(a))/(1 - a) (z - a)/(1 - conj(a) z): equality in Goryainov's bound."""
    a = complex(a)
    if abs(a) >= 1.0:
        raise InvalidWitnessParams("parameter must satisfy |a| < 1")
    pre = (1.0 - a.conjugate()) / (1.0 - a)
    return BlaschkeProduct(pre, 1, (a,))


def witness_unimodular(n: int, seed: int) -> RootForm:
    """n random zeros on the unit circle: excess rotation vanishes identically."""
    if n < 1:
        raise InvalidWitnessParams("need n >= 1 roots")
    rng = np.random.default_rng(seed)
    angles = rng.uniform(0.0, 2.0 * math.pi, size=n)
    return RootForm(1.0, tuple(cmath.exp(1j * t) for t in angles))


def witness_rational(
    poles: Iterable[complex], alpha: complex, beta: complex
) -> RationalFunction:
    """alpha B + beta with |alpha| = |beta| = 1: equality family for rational rotation.

    Its zeros all lie on the unit circle, so the lower and the upper
    rotation comparison are attained simultaneously.
    """
    ps = tuple(complex(a) for a in poles)
    if not ps:
        raise InvalidWitnessParams("need at least one pole")
    for a in ps:
        if abs(a) <= 1.0 + 1e-12:
            raise InvalidWitnessParams("poles must satisfy |a| > 1")
    alpha, beta = complex(alpha), complex(beta)
    for w in (alpha, beta):
        if abs(abs(w) - 1.0) > 1e-9:
            raise InvalidWitnessParams("alpha and beta must be unimodular")
    alpha /= abs(alpha)
    beta /= abs(beta)

    # numerator of alpha B + beta over the common denominator prod (z - a_k)
    top = expand_monic(1.0 / a.conjugate() for a in ps)
    lead = 1.0 + 0j
    for a in ps:
        lead *= -a.conjugate()
    bottom = expand_monic(ps)
    num = [alpha * lead * t + beta * b for t, b in zip(top, bottom)]
    return RationalFunction(num, ps)


@dataclass(frozen=True)
class WitnessSpec:
    """Serializable description of one witness; round-trips through the CLI."""

    kind: str  # value | arc | goryainov | unimodular | rational
    a: complex | None = None
    leading: complex | None = None
    unimodular_roots: tuple[complex, ...] = ()
    alpha: float | None = None
    poles: tuple[complex, ...] = ()
    coeff_alpha: complex | None = None
    coeff_beta: complex | None = None
    n: int | None = None
    seed: int | None = None

    def to_json(self) -> dict:
        def pair(w):
            return None if w is None else [w.real, w.imag]

        return {
            "kind": self.kind,
            "a": pair(self.a),
            "leading": pair(self.leading),
            "unimodular_roots": [[r.real, r.imag] for r in self.unimodular_roots],
            "alpha": self.alpha,
            "poles": [[p.real, p.imag] for p in self.poles],
            "coeff_alpha": pair(self.coeff_alpha),
            "coeff_beta": pair(self.coeff_beta),
            "n": self.n,
            "seed": self.seed,
        }

    @staticmethod
    def from_json(data: dict) -> "WitnessSpec":
        def cx(v):
            return None if v is None else complex(v[0], v[1])

        return WitnessSpec(
            kind=data["kind"],
            a=cx(data.get("a")),
            leading=cx(data.get("leading")),
            unimodular_roots=tuple(complex(re, im) for re, im in data.get("unimodular_roots", [])),
            alpha=data.get("alpha"),
            poles=tuple(complex(re, im) for re, im in data.get("poles", [])),
            coeff_alpha=cx(data.get("coeff_alpha")),
            coeff_beta=cx(data.get("coeff_beta")),
            n=data.get("n"),
            seed=data.get("seed"),
        )
