"""Divisor classes on the Hirzebruch surface Sigma_e.

Pic(Sigma_e) is free on the negative section ``s`` (s^2 = -e) and the fiber
``l`` of the ruling over P^1. For e = 0 the ruling ``l`` is always the one
restricting to the canonical-map fibration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactring import Coefficient, ModeError, Poly, as_int, evaluate, is_zero, parse_generic, render

__all__ = [
    "SurfaceDivisorClass",
    "CohomologyTable",
    "S",
    "L",
    "ZERO",
    "intersect",
    "canonical_class",
    "is_nef",
    "is_base_point_free",
    "is_very_ample",
    "cohomology",
    "h0",
    "restriction_degree_to_section",
    "parse_surface_class",
]


@dataclass(frozen=True)
class SurfaceDivisorClass:
    """The class ``alpha*s + beta*l``."""

    alpha: Coefficient = 0
    beta: Coefficient = 0

    def __add__(self, other: SurfaceDivisorClass) -> SurfaceDivisorClass:
        if not isinstance(other, SurfaceDivisorClass):
            return NotImplemented
        return SurfaceDivisorClass(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other: SurfaceDivisorClass) -> SurfaceDivisorClass:
        if not isinstance(other, SurfaceDivisorClass):
            return NotImplemented
        return SurfaceDivisorClass(self.alpha - other.alpha, self.beta - other.beta)

    def __neg__(self) -> SurfaceDivisorClass:
        return SurfaceDivisorClass(-self.alpha, -self.beta)

    def __rmul__(self, k: Coefficient) -> SurfaceDivisorClass:
        if not isinstance(k, (int, Poly)):
            return NotImplemented
        return SurfaceDivisorClass(k * self.alpha, k * self.beta)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SurfaceDivisorClass):
            return NotImplemented
        return is_zero(self.alpha - other.alpha) and is_zero(self.beta - other.beta)

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta))

    def is_zero(self) -> bool:
        return is_zero(self.alpha) and is_zero(self.beta)

    def evaluate(self, e_val: int, a_val: int) -> SurfaceDivisorClass:
        return SurfaceDivisorClass(evaluate(self.alpha, e_val, a_val), evaluate(self.beta, e_val, a_val))

    def concrete(self) -> tuple[int, int]:
        return as_int(self.alpha), as_int(self.beta)

    def to_json(self) -> dict:
        return {"alpha": _json_coeff(self.alpha), "beta": _json_coeff(self.beta)}

    def __str__(self) -> str:
        return format_linear(((self.alpha, "s"), (self.beta, "l")))


def _json_coeff(c: Coefficient):
    if isinstance(c, Poly):
        return c.constant_value() if c.is_constant() else render(c)
    return c


def format_linear(parts) -> str:
    """Render ``[(coeff, symbol), ...]`` as e.g. ``-s + (3*a - e - 2)*l``."""
    out = []
    for c, sym in parts:
        if is_zero(c):
            continue
        text = render(c)
        simple = not isinstance(c, Poly) or c.is_constant()
        neg = text.startswith("-") and simple
        mag = text[1:] if neg else text
        body = sym if mag == "1" else (f"{mag}*{sym}" if simple else f"({mag})*{sym}")
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out) if out else "0"


S = SurfaceDivisorClass(1, 0)
L = SurfaceDivisorClass(0, 1)
ZERO = SurfaceDivisorClass(0, 0)


@dataclass(frozen=True)
class CohomologyTable:
    h0: int
    h1: int
    h2: int
    chi: int

    def __post_init__(self):
        if min(self.h0, self.h1, self.h2) < 0:
            raise ArithmeticError(f"negative cohomology dimension in {self}")
        if self.chi != self.h0 - self.h1 + self.h2:
            raise ArithmeticError(f"chi mismatch in {self}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def intersect(d1: SurfaceDivisorClass, d2: SurfaceDivisorClass, e: Coefficient) -> Coefficient:
    """Intersection pairing: s.s = -e, s.l = 1, l.l = 0."""
    return -e * d1.alpha * d2.alpha + d1.alpha * d2.beta + d2.alpha * d1.beta


def canonical_class(e: Coefficient) -> SurfaceDivisorClass:
    return SurfaceDivisorClass(-2, -(e + 2))


def _concrete(d: SurfaceDivisorClass, e: Coefficient) -> tuple[int, int, int]:
    try:
        alpha, beta = d.concrete()
        e = as_int(e)
    except ModeError as exc:
        raise ModeError(f"positivity and cohomology are concrete-mode only: {exc}") from None
    if e < 0:
        raise ValueError(f"Hirzebruch surface needs e >= 0, got {e}")
    return alpha, beta, e


def is_nef(d: SurfaceDivisorClass, e: Coefficient) -> bool:
    alpha, beta, e = _concrete(d, e)
    return alpha >= 0 and beta >= alpha * e


def is_base_point_free(d: SurfaceDivisorClass, e: Coefficient) -> bool:
    # on Sigma_e a line bundle is globally generated iff it is nef
    return is_nef(d, e)


def is_very_ample(d: SurfaceDivisorClass, e: Coefficient) -> bool:
    alpha, beta, e = _concrete(d, e)
    return alpha > 0 and beta > alpha * e


def h0(d: SurfaceDivisorClass, e: Coefficient) -> int:
    """Global sections, from the pushforward Sym^alpha(O + O(-e)) (beta) on P^1."""
    alpha, beta, e = _concrete(d, e)
    if alpha < 0:
        return 0
    return sum(max(0, beta - i * e + 1) for i in range(alpha + 1))


def cohomology(d: SurfaceDivisorClass, e: Coefficient) -> CohomologyTable:
    """h^0, h^1, h^2 of O(d); h^2 by Serre duality, h^1 from Riemann-Roch."""
    alpha, beta, e = _concrete(d, e)
    d = SurfaceDivisorClass(alpha, beta)
    k = canonical_class(e)
    top = h0(d, e)
    bottom = h0(k - d, e)
    twice_chi = 2 + intersect(d, d - k, e)
    if twice_chi % 2:
        raise ArithmeticError(f"odd D.(D-K) for {d} on Sigma_{e}")
    chi = twice_chi // 2
    return CohomologyTable(top, top + bottom - chi, bottom, chi)


def restriction_degree_to_section(d: SurfaceDivisorClass, e: Coefficient) -> Coefficient:
    """Degree of O(d) restricted to the negative section, i.e. d.s."""
    return intersect(d, S, e)


def parse_surface_class(text: str) -> SurfaceDivisorClass:
    """Parse ``alpha*s + beta*l`` where alpha, beta are polynomials in e, a."""
    terms = parse_generic(text, ("e", "a", "s", "l"))
    alpha: dict = {}
    beta: dict = {}
    for (i, j, ks, kl), c in terms.items():
        if (ks, kl) == (1, 0):
            alpha[(i, j)] = c
        elif (ks, kl) == (0, 1):
            beta[(i, j)] = c
        else:
            raise ValueError(f"{text!r} is not linear in s, l")
    return SurfaceDivisorClass(_lower(Poly(alpha)), _lower(Poly(beta)))


def _lower(p: Poly) -> Coefficient:
    return p.constant_value() if p.is_constant() else p
