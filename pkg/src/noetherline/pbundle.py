"""The P^1-bundle P = P(O + O(d0)) over Sigma_e, with d0 = -2s - 2al.

Pic(P) is free on the section E and the pullbacks tau^*s, tau^*l. Triple
products are computed by normal-form reduction with the rule

    E^2 = E . tau^*d0

(the second Chern class of the extension vanishes), together with
E . tau^*C . tau^*C' = C.C' on Sigma_e and tau^*(.)^3 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .exactring import Coefficient, Poly, evaluate, is_zero, parse_generic
from .hirzebruch import SurfaceDivisorClass, ZERO, canonical_class, intersect
from .hirzebruch import _lower, format_linear

__all__ = [
    "BundleDivisorClass",
    "BundleGeometry",
    "canonical_class_P",
    "restrict_to_E",
    "triple_intersect",
    "pullback_class",
    "parse_bundle_class",
]


@dataclass(frozen=True)
class BundleDivisorClass:
    """The class ``epsilon*E + tau^*(base)``."""

    epsilon: Coefficient = 0
    base: SurfaceDivisorClass = ZERO

    def __add__(self, other: BundleDivisorClass) -> BundleDivisorClass:
        if not isinstance(other, BundleDivisorClass):
            return NotImplemented
        return BundleDivisorClass(self.epsilon + other.epsilon, self.base + other.base)

    def __sub__(self, other: BundleDivisorClass) -> BundleDivisorClass:
        if not isinstance(other, BundleDivisorClass):
            return NotImplemented
        return BundleDivisorClass(self.epsilon - other.epsilon, self.base - other.base)

    def __neg__(self) -> BundleDivisorClass:
        return BundleDivisorClass(-self.epsilon, -self.base)

    def __rmul__(self, k: Coefficient) -> BundleDivisorClass:
        if not isinstance(k, (int, Poly)):
            return NotImplemented
        return BundleDivisorClass(k * self.epsilon, k * self.base)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BundleDivisorClass):
            return NotImplemented
        return is_zero(self.epsilon - other.epsilon) and self.base == other.base

    def __hash__(self) -> int:
        return hash((self.epsilon, self.base))

    def is_zero(self) -> bool:
        return is_zero(self.epsilon) and self.base.is_zero()

    def evaluate(self, e_val: int, a_val: int) -> BundleDivisorClass:
        return BundleDivisorClass(evaluate(self.epsilon, e_val, a_val), self.base.evaluate(e_val, a_val))

    def __str__(self) -> str:
        if self.base.is_zero():
            return format_linear(((self.epsilon, "E"),))
        pulled = f"tau*({self.base})"
        return pulled if is_zero(self.epsilon) else f"{format_linear(((self.epsilon, 'E'),))} + {pulled}"


def pullback_class(c: SurfaceDivisorClass) -> BundleDivisorClass:
    return BundleDivisorClass(0, c)


SECTION = BundleDivisorClass(1, ZERO)


@dataclass(frozen=True)
class BundleGeometry:
    """Parameters (e, a); ints for concrete mode, ``Poly`` for symbolic mode."""

    e: Coefficient
    a: Coefficient

    @property
    def d0(self) -> SurfaceDivisorClass:
        return SurfaceDivisorClass(-2, -2 * self.a)

    @classmethod
    def symbolic(cls) -> BundleGeometry:
        return cls(Poly.var("e"), Poly.var("a"))


def canonical_class_P(geom: BundleGeometry) -> BundleDivisorClass:
    return BundleDivisorClass(-2, SurfaceDivisorClass(-4, -(2 * geom.a + geom.e + 2)))


def canonical_class_P_from_surface(geom: BundleGeometry) -> BundleDivisorClass:
    """K_P = -2E + tau^*(K_Sigma + d0), the relative Euler sequence form."""
    return BundleDivisorClass(-2, canonical_class(geom.e) + geom.d0)


def restrict_to_E(d: BundleDivisorClass, geom: BundleGeometry) -> SurfaceDivisorClass:
    """Restriction to the section E, identified with Sigma_e; O_E(E) = O(d0)."""
    return d.epsilon * geom.d0 + d.base


def _reduce(e_power: int, bases: list[SurfaceDivisorClass], geom: BundleGeometry,
            from_right: bool) -> Coefficient:
    # monomial E^e_power . prod(tau^* bases), total degree 3
    while e_power >= 2:
        e_power -= 1
        if from_right:
            bases = bases + [geom.d0]
        else:
            bases = [geom.d0] + bases
    if e_power == 0:
        return 0
    c1, c2 = bases
    return intersect(c1, c2, geom.e)


def triple_intersect(d1: BundleDivisorClass, d2: BundleDivisorClass, d3: BundleDivisorClass,
                     geom: BundleGeometry, *, from_right: bool = False) -> Coefficient:
    """Degree of d1.d2.d3 on P, by expansion into E-monomials and reduction."""
    total: Coefficient = 0
    for picks in product((0, 1), repeat=3):
        coeff: Coefficient = 1
        bases = []
        e_power = 0
        for pick, d in zip(picks, (d1, d2, d3)):
            if pick:
                coeff = coeff * d.epsilon
                e_power += 1
            else:
                bases.append(d.base)
        if is_zero(coeff):
            continue
        total = total + coeff * _reduce(e_power, bases, geom, from_right)
    return total


def parse_bundle_class(text: str) -> BundleDivisorClass:
    """Parse ``epsilon*E + tau*(alpha*s + beta*l)``."""
    # tau^* is linear and E is its own symbol, so the pullback marker is cosmetic
    cleaned = text.replace("tau^*", "").replace("tau*", "")
    terms = parse_generic(cleaned, ("e", "a", "E", "s", "l"))
    parts: list[dict] = [{}, {}, {}]
    for (i, j, kE, ks, kl), c in terms.items():
        try:
            slot = [(1, 0, 0), (0, 1, 0), (0, 0, 1)].index((kE, ks, kl))
        except ValueError:
            raise ValueError(f"{text!r} is not linear in E, s, l") from None
        parts[slot][(i, j)] = c
    eps, alpha, beta = (_lower(Poly(p)) for p in parts)
    return BundleDivisorClass(eps, SurfaceDivisorClass(alpha, beta))
