"""Complex polynomials and their rotation speed on the unit circle.

A polynomial is kept in coefficient form, P(z) = c0 + c1 z + ... + cn z^n
with cn != 0, or as a leading coefficient together with its zeros.  The
central quantity is the boundary rotation speed

    (d/dtheta) arg P(e^{i theta}) = Re( z P'(z) / P(z) ),   z = e^{i theta},

which is finite at every boundary point away from the zeros of P.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ZeroProximity

# A point counts as zero proximate when |P(z)| < ZERO_PROXIMITY_REL * max|c_k|.
ZERO_PROXIMITY_REL = 1e-12

# The leading coefficient must dominate roundoff in the coefficient list,
# otherwise the degree itself is numerically ambiguous.
_LEADING_REL = 1e-13


def _horner(coeffs: Sequence[complex], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _horner_pair(coeffs: Sequence[complex], z: complex) -> tuple[complex, complex]:
    """Value and first derivative in one nested pass."""
    acc = 0j
    dacc = 0j
    for c in reversed(coeffs):
        dacc = dacc * z + acc
        acc = acc * z + c
    return acc, dacc


def expand_monic(roots: Iterable[complex]) -> list[complex]:
    """Coefficients of prod (z - r), ascending degree."""
    coeffs: list[complex] = [1.0 + 0j]
    for r in roots:
        coeffs.append(0j)
        for k in range(len(coeffs) - 1, 0, -1):
            coeffs[k] = coeffs[k - 1] - r * coeffs[k]
        coeffs[0] = -r * coeffs[0]
    return coeffs


@dataclass(frozen=True)
class Polynomial:
    """Coefficient-form polynomial, ascending degree, degree >= 1."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable[complex]):
        cs = tuple(complex(c) for c in coeffs)
        if len(cs) < 2:
            raise ValueError("polynomial must have degree >= 1")
        scale = max(abs(c) for c in cs)
        if abs(cs[-1]) == 0.0 or abs(cs[-1]) < _LEADING_REL * scale:
            raise ValueError("leading coefficient is (numerically) zero")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return self.coeffs[-1]

    @property
    def constant(self) -> complex:
        return self.coeffs[0]

    @property
    def coeff_scale(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def __call__(self, z: complex) -> complex:
        return _horner(self.coeffs, z)

    def value_and_derivative(self, z: complex) -> tuple[complex, complex]:
        return _horner_pair(self.coeffs, z)

    def scaled(self, c: complex) -> "Polynomial":
        return Polynomial(tuple(c * ck for ck in self.coeffs))

    def rotated(self, w: complex) -> "Polynomial":
        """The substituted polynomial P(w z), coefficients c_k w^k."""
        wk = 1.0 + 0j
        out = []
        for c in self.coeffs:
            out.append(c * wk)
            wk *= w
        return Polynomial(out)

    def to_json(self) -> list[list[float]]:
        return [[c.real, c.imag] for c in self.coeffs]

    @staticmethod
    def from_json(data: Sequence[Sequence[float]]) -> "Polynomial":
        return Polynomial(complex(re, im) for re, im in data)


@dataclass(frozen=True)
class RootForm:
    """Leading coefficient plus the multiset of zeros."""

    leading: complex
    roots: tuple[complex, ...]

    def __init__(self, leading: complex, roots: Iterable[complex]):
        lead = complex(leading)
        if abs(lead) == 0.0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "leading", lead)
        object.__setattr__(self, "roots", tuple(complex(r) for r in roots))

    @property
    def degree(self) -> int:
        return len(self.roots)

    def to_json(self) -> dict:
        return {
            "leading": [self.leading.real, self.leading.imag],
            "roots": [[r.real, r.imag] for r in self.roots],
        }

    @staticmethod
    def from_json(data: dict) -> "RootForm":
        lead = complex(data["leading"][0], data["leading"][1])
        return RootForm(lead, (complex(re, im) for re, im in data["roots"]))


@dataclass(frozen=True)
class UnitCirclePoint:
    """Boundary point e^{i theta}, always derived from the angle."""

    theta: float

    @property
    def z(self) -> complex:
        return cmath.exp(1j * self.theta)


def evaluate(p: Polynomial, z: complex) -> complex:
    """P(z) by Horner's nested scheme."""
    return _horner(p.coeffs, z)


def from_roots(rf: RootForm) -> Polynomial:
    """Expand leading * prod (z - r_k) into coefficient form.

    Requires degree >= 1; the expansion is the iterated product of the
    monomial factors, so Vieta's relations hold to roundoff.
    """
    if rf.degree < 1:
        raise ValueError("need at least one root to form a polynomial of degree >= 1")
    coeffs = expand_monic(rf.roots)
    return Polynomial(tuple(rf.leading * c for c in coeffs))


def conj_reversed_coeffs(coeffs: Sequence[complex]) -> tuple[complex, ...]:
    """Coefficient list of z^n * conj(P(1/conj(z))): conjugate and reverse."""
    return tuple(c.conjugate() for c in reversed(coeffs))


def reverse_conjugate(p: Polynomial) -> Polynomial:
    """The reversed-conjugate polynomial Q(z) = z^n conj(P(1/conj(z))).

    Q has coefficients conj(c_{n-k}) and satisfies |Q(z)| = |P(z)| on
    |z| = 1.  If P(0) is (numerically) zero the reversal would drop the
    degree, which the Polynomial invariant forbids; such inputs are
    rejected.
    """
    return Polynomial(conj_reversed_coeffs(p.coeffs))


def rotation_speed(p: Polynomial, pt: UnitCirclePoint) -> float:
    """(d/dtheta) arg P(e^{i theta}) = Re(z P'(z)/P(z)) at z = e^{i theta}.

    Raises ZeroProximity when |P(z)| < 1e-12 * max|c_k|: the quantity is
    undefined at zeros of P and meaningless in their immediate vicinity.
    """
    z = pt.z
    val, der = _horner_pair(p.coeffs, z)
    if abs(val) < ZERO_PROXIMITY_REL * p.coeff_scale:
        raise ZeroProximity(f"|P(e^{{i{pt.theta}}})| = {abs(val):.3e} is below the zero-proximity guard")
    return (z * der / val).real


def to_root_form(p: Polynomial, cfg=None) -> RootForm:
    """Solve for all zeros and return leading + roots.

    Delegates to the simultaneous root iteration; raises NonConvergence
    for inputs it cannot resolve.
    """
    from .roots import find_roots

    return RootForm(p.leading, find_roots(p, cfg))
