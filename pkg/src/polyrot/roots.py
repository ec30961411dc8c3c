"""Simultaneous root finding and zero-location classification.

An Aberth-Ehrlich iteration updates all root approximations at once; it
converges cubically on simple roots and degrades gracefully to clusters,
which is all the bound checks need (they only consume the partition of
zeros into inside / on / outside the unit circle).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NonConvergence
from .poly import Polynomial, _horner_pair

# Zeros within this band of |z| = 1 are treated as lying on the circle.
ON_CIRCLE_TOL = 1e-9

# Irrational angular offset for the initial guesses; avoids symmetric
# stagnation on polynomials with rotational symmetry.
_ANGLE_OFFSET = math.sqrt(2.0) / 2.0


@dataclass(frozen=True)
class RootSolveConfig:
    max_iterations: int = 200
    convergence_tol: float = 1e-13
    residual_tol: float = 1e-10

    def __post_init__(self):
        if self.max_iterations <= 0:
            raise ValueError("max_iterations must be positive")
        if not (0.0 < self.convergence_tol < 1.0):
            raise ValueError("convergence_tol must lie in (0, 1)")
        if self.residual_tol <= 0.0:
            raise ValueError("residual_tol must be positive")


DEFAULT_CONFIG = RootSolveConfig()


def _residual_scale(coeffs, z: complex) -> float:
    n = len(coeffs) - 1
    return sum(abs(c) for c in coeffs) * max(1.0, abs(z)) ** n


def find_roots(p: Polynomial, cfg: RootSolveConfig | None = None) -> list[complex]:
    """All zeros of p, with multiplicity, in a deterministic order.

    Zeros at the origin are deflated exactly first; the remaining monic
    polynomial is solved by the Aberth-Ehrlich simultaneous iteration
    started on a circle of radius (1 + max|c_k/c_n|)^{1/2}.

    Raises NonConvergence when the iteration stalls and the residuals do
    not meet even the cluster-relaxed acceptance threshold.
    """
    cfg = cfg or DEFAULT_CONFIG
    lead = p.leading
    monic = [c / lead for c in p.coeffs]

    # Exact deflation of origin zeros keeps clusters at 0 out of the iteration.
    scale = max(abs(c) for c in monic)
    origin = 0
    while len(monic) > 1 and abs(monic[0]) <= 1e-15 * scale:
        monic.pop(0)
        origin += 1
    roots: list[complex] = [0j] * origin
    m = len(monic) - 1
    if m == 0:
        return roots

    radius = math.sqrt(1.0 + max(abs(c) for c in monic[:-1]))
    zs = [radius * cmath.exp(1j * (2.0 * math.pi * j / m + _ANGLE_OFFSET)) for j in range(m)]

    iterations = 0
    converged = False
    for iterations in range(1, cfg.max_iterations + 1):
        movement = 0.0
        residual_ok = True
        for j in range(m):
            zj = zs[j]
            val, der = _horner_pair(monic, zj)
            if abs(val) > 1e-14 * _residual_scale(monic, zj):
                residual_ok = False
            if val == 0:
                continue
            if der == 0:
                # saddle point of |P|: nudge off it and retry next sweep
                zs[j] = zj * (1.0 + 1e-6) + 1e-6
                movement = max(movement, 1e-6)
                continue
            newton = val / der
            s = 0j
            for k in range(m):
                if k != j:
                    dz = zj - zs[k]
                    if dz == 0:
                        dz = 1e-12
                    s += 1.0 / dz
            denom = 1.0 - newton * s
            step = newton if abs(denom) < 1e-300 else newton / denom
            zs[j] = zj - step
            movement = max(movement, abs(step) / (1.0 + abs(zs[j])))
        if residual_ok or movement < cfg.convergence_tol:
            converged = True
            break

    relaxed = cfg.residual_tol ** (1.0 / m)
    for z in zs:
        res = abs(_horner_pair(monic, z)[0])
        bound = cfg.residual_tol * _residual_scale(monic, z)
        # clusters are ill conditioned: accept them at the relaxed threshold
        if res > bound and res > relaxed * _residual_scale(monic, z):
            raise NonConvergence(iterations)
    if not converged:
        # stalled but residuals acceptable: a cluster, keep the approximations
        pass

    roots.extend(zs)
    roots.sort(key=lambda r: (r.real, r.imag))
    return roots


@dataclass(frozen=True)
class ZeroClassification:
    """Partition of the zeros relative to the unit circle."""

    roots: tuple[complex, ...]
    inside: int
    on_circle: int
    outside: int

    @property
    def all_in_closed_disk(self) -> bool:
        return self.outside == 0

    @property
    def all_on_circle(self) -> bool:
        return self.on_circle == len(self.roots)

    @property
    def none_inside_open_disk(self) -> bool:
        return self.inside == 0


def classify_root_list(roots) -> ZeroClassification:
    inside = on = outside = 0
    rs = tuple(complex(r) for r in roots)
    for r in rs:
        d = abs(r) - 1.0
        if abs(d) <= ON_CIRCLE_TOL:
            on += 1
        elif d < 0:
            inside += 1
        else:
            outside += 1
    return ZeroClassification(rs, inside, on, outside)


def classify_zeros(p: Polynomial, cfg: RootSolveConfig | None = None) -> ZeroClassification:
    """Solve for the zeros of p and partition them against the unit circle."""
    return classify_root_list(find_roots(p, cfg))
