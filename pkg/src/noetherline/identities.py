"""Symbolic identities in Z[e, a] that the construction must satisfy.

Each identity evaluates to a residual (a polynomial or a divisor class)
that must be structurally zero.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .doublecover import (
    E0,
    CoverData,
    canonical_class_Y,
    named_classes,
    pullback,
    pushforward_dualizing,
    restrict_to_E0,
    triple_intersect_Y,
)
from .exactring import A, E, Poly, is_zero, render
from .hirzebruch import SurfaceDivisorClass, canonical_class, intersect
from .pbundle import (
    SECTION,
    BundleDivisorClass,
    BundleGeometry,
    canonical_class_P,
    canonical_class_P_from_surface,
    pullback_class,
    restrict_to_E,
    triple_intersect,
)

__all__ = ["Identity", "IdentityResult", "IDENTITIES", "verify_identities"]


@dataclass(frozen=True)
class Identity:
    name: str
    residual: Callable[[BundleGeometry], object]


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    residual: str


def _zero(x) -> bool:
    if isinstance(x, tuple):
        return all(_zero(y) for y in x)
    if hasattr(x, "is_zero") and not isinstance(x, int):
        return x.is_zero()
    return is_zero(x)


def _Y(g: BundleGeometry):
    c = named_classes(g)
    return c["H"], c["M"], c["E0"]


def _h_cubed(g):
    h, _, _ = _Y(g)
    return triple_intersect_Y(h, h, h, g) - (8 * g.a - 4 * g.e - 6)


def _noether(g):
    h, _, _ = _Y(g)
    pg = 6 * g.a - 3 * g.e - 2
    return 3 * triple_intersect_Y(h, h, h, g) - 4 * pg + 10


def _e0_cubed(g):
    return triple_intersect_Y(E0, E0, E0, g) - (2 * g.a - g.e)


def _h2e0(g):
    h, _, e0 = _Y(g)
    return triple_intersect_Y(h, h, e0, g)


def _hme0(g):
    h, m, e0 = _Y(g)
    return triple_intersect_Y(h, m, e0, g) - (2 * g.a - g.e - 2)


def _m2e0(g):
    _, m, e0 = _Y(g)
    return triple_intersect_Y(m, m, e0, g) - (6 * g.a - 3 * g.e - 4)


def _adjunction_E0(g):
    return restrict_to_E0(canonical_class_Y(g) + E0, g) - canonical_class(g.e)


def _T_restricted(g):
    return restrict_to_E(CoverData(g).T_class, g)


def _pg_from_k(g):
    k = 3 * g.a - 2 * g.e - 2
    return 2 * k + g.e + 2 - (6 * g.a - 3 * g.e - 2)


def _K_Y_cross(g):
    return pullback(canonical_class_P(g) + CoverData(g).half_class) - canonical_class_Y(g)


def _K_P_surface(g):
    return canonical_class_P(g) - canonical_class_P_from_surface(g)


def _adjunction_E(g):
    return restrict_to_E(canonical_class_P(g) + SECTION, g) - canonical_class(g.e)


def _branch_twice_L(g):
    d = CoverData(g)
    return d.branch_class - 2 * d.half_class


def _E_cubed(g):
    return triple_intersect(SECTION, SECTION, SECTION, g) - (8 * g.a - 4 * g.e)


def _E_pullbacks(g):
    # E . tau^*C . tau^*C' = C.C' on the basis s, l
    basis = (SurfaceDivisorClass(1, 0), SurfaceDivisorClass(0, 1))
    return tuple(
        triple_intersect(SECTION, pullback_class(c1), pullback_class(c2), g) - intersect(c1, c2, g.e)
        for c1 in basis for c2 in basis
    )


def _projection_formula(g):
    x = BundleDivisorClass(1, SurfaceDivisorClass(1, g.a))
    y = BundleDivisorClass(-2, SurfaceDivisorClass(3, -g.e))
    z = BundleDivisorClass(3, SurfaceDivisorClass(0, 2))
    return triple_intersect_Y(pullback(x), pullback(y), pullback(z), g) - 2 * triple_intersect(x, y, z, g)


def _pushforward(g):
    p = pushforward_dualizing(g)
    return (p.summands[0] - SurfaceDivisorClass(3, 3 * g.a), p.summands[1] - SurfaceDivisorClass(1, g.a))


IDENTITIES: tuple[Identity, ...] = (
    Identity("H^3 - (8a - 4e - 6)", _h_cubed),
    Identity("3*H^3 - 4*(6a - 3e - 2) + 10", _noether),
    Identity("E0^3 - (2a - e)", _e0_cubed),
    Identity("H^2.E0", _h2e0),
    Identity("H.M.E0 - (2a - e - 2)", _hme0),
    Identity("M^2.E0 - (6a - 3e - 4)", _m2e0),
    Identity("(K_Y + E0)|E0 - K_Sigma", _adjunction_E0),
    Identity("T|E", _T_restricted),
    Identity("2k + e + 2 - (6a - 3e - 2), k = 3a - 2e - 2", _pg_from_k),
    Identity("psi^*(K_P + L) - K_Y", _K_Y_cross),
    Identity("K_P - (-2E + tau^*(K_Sigma + d0))", _K_P_surface),
    Identity("(K_P + E)|E - K_Sigma", _adjunction_E),
    Identity("(E + T) - 2L", _branch_twice_L),
    Identity("E^3 - (8a - 4e)", _E_cubed),
    Identity("E.tau^*C.tau^*C' - C.C'", _E_pullbacks),
    Identity("projection formula psi^*x.psi^*y.psi^*z - 2xyz", _projection_formula),
    Identity("phi_* omega_{Y/Sigma} - (3s + 3al) - (s + al)", _pushforward),
)


def _render_residual(x) -> str:
    if isinstance(x, tuple):
        return "; ".join(_render_residual(y) for y in x)
    if isinstance(x, (int, Poly)):
        return render(x)
    return str(x)


def verify_identities(identities: Iterable[Identity] = IDENTITIES,
                      geom: BundleGeometry | None = None) -> list[IdentityResult]:
    geom = geom or BundleGeometry(E, A)
    out = []
    for ident in identities:
        r = ident.residual(geom)
        out.append(IdentityResult(ident.name, _zero(r), _render_residual(r)))
    return out
