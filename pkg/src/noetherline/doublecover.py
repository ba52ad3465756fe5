"""The double cover psi: Y -> P branched along E + T, T in |5E + tau^*(10s + 10al)|.

Classes on Y are written ``mu*E0 + psi^*tau^*(base)`` with E0 = psi^{-1}(E),
so psi^*E = 2*E0. Triple products are pushed to P by the projection formula:
for pullbacks, (psi^*x)(psi^*y)(psi^*z) = 2 * xyz on P.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactring import Coefficient, Poly, as_int, evaluate, exact_div, is_zero
from .hirzebruch import (
    L as FIBER,
    S as SECTION_CLASS,
    SurfaceDivisorClass,
    ZERO,
    canonical_class,
    format_linear,
    h0,
    intersect,
    is_nef,
    is_very_ample,
    restriction_degree_to_section,
)
from .pbundle import (
    BundleDivisorClass,
    BundleGeometry,
    canonical_class_P,
    restrict_to_E,
    triple_intersect,
)

__all__ = [
    "CoverDivisorClass",
    "CoverData",
    "ConstructionCertificate",
    "CertificateError",
    "pullback",
    "triple_intersect_Y",
    "restrict_to_E0",
    "canonical_class_Y",
    "named_classes",
    "geometric_genus",
    "curve_probes",
    "pushforward_dualizing",
    "branch_checks",
    "build_certificate",
    "GENUS_OF_C",
]

# genus of the general fiber C of the canonical fibration
GENUS_OF_C = 2


class CertificateError(RuntimeError):
    """An internal lattice check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CoverDivisorClass:
    """The class ``mu*E0 + psi^*tau^*(base)``."""

    mu: Coefficient = 0
    base: SurfaceDivisorClass = ZERO

    def __add__(self, other: CoverDivisorClass) -> CoverDivisorClass:
        if not isinstance(other, CoverDivisorClass):
            return NotImplemented
        return CoverDivisorClass(self.mu + other.mu, self.base + other.base)

    def __sub__(self, other: CoverDivisorClass) -> CoverDivisorClass:
        if not isinstance(other, CoverDivisorClass):
            return NotImplemented
        return CoverDivisorClass(self.mu - other.mu, self.base - other.base)

    def __neg__(self) -> CoverDivisorClass:
        return CoverDivisorClass(-self.mu, -self.base)

    def __rmul__(self, k: Coefficient) -> CoverDivisorClass:
        if not isinstance(k, (int, Poly)):
            return NotImplemented
        return CoverDivisorClass(k * self.mu, k * self.base)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoverDivisorClass):
            return NotImplemented
        return is_zero(self.mu - other.mu) and self.base == other.base

    def __hash__(self) -> int:
        return hash((self.mu, self.base))

    def is_zero(self) -> bool:
        return is_zero(self.mu) and self.base.is_zero()

    def evaluate(self, e_val: int, a_val: int) -> CoverDivisorClass:
        return CoverDivisorClass(evaluate(self.mu, e_val, a_val), self.base.evaluate(e_val, a_val))

    def __str__(self) -> str:
        if self.base.is_zero():
            return format_linear(((self.mu, "E0"),))
        pulled = f"psi*tau*({self.base})"
        return pulled if is_zero(self.mu) else f"{format_linear(((self.mu, 'E0'),))} + {pulled}"


E0 = CoverDivisorClass(1, ZERO)


@dataclass(frozen=True)
class CoverData:
    """Branch class E + T and the half class L with E + T ~ 2L."""

    geom: BundleGeometry

    @property
    def T_class(self) -> BundleDivisorClass:
        a = self.geom.a
        return BundleDivisorClass(5, SurfaceDivisorClass(10, 10 * a))

    @property
    def branch_class(self) -> BundleDivisorClass:
        return BundleDivisorClass(1, ZERO) + self.T_class

    @property
    def half_class(self) -> BundleDivisorClass:
        a = self.geom.a
        return BundleDivisorClass(3, SurfaceDivisorClass(5, 5 * a))


def pullback(d: BundleDivisorClass) -> CoverDivisorClass:
    return CoverDivisorClass(2 * d.epsilon, d.base)


def _doubled_on_P(d: CoverDivisorClass) -> BundleDivisorClass:
    # 2*d = psi^*(mu*E + tau^*(2*base)) -- always a genuine pullback
    return BundleDivisorClass(d.mu, 2 * d.base)


def triple_intersect_Y(d1: CoverDivisorClass, d2: CoverDivisorClass, d3: CoverDivisorClass,
                       geom: BundleGeometry) -> Coefficient:
    """Triple product on Y: (2d1)(2d2)(2d3) = 2 * (product on P), divided by 8."""
    on_p = triple_intersect(_doubled_on_P(d1), _doubled_on_P(d2), _doubled_on_P(d3), geom)
    try:
        return exact_div(on_p, 4)
    except ArithmeticError as exc:
        raise CertificateError(f"non-integral triple product on Y: {exc}") from None


def restrict_to_E0(d: CoverDivisorClass, geom: BundleGeometry) -> SurfaceDivisorClass:
    """Restriction to E0 ~ Sigma_e, using O_E0(E0) = -s - al."""
    return d.mu * SurfaceDivisorClass(-1, -geom.a) + d.base


def canonical_class_Y(geom: BundleGeometry) -> CoverDivisorClass:
    return CoverDivisorClass(2, SurfaceDivisorClass(1, 3 * geom.a - geom.e - 2))


def named_classes(geom: BundleGeometry) -> dict[str, CoverDivisorClass]:
    """E0, M, K_Y, H = K_Y - E0 and 3H - K_Y = H + M."""
    k_y = canonical_class_Y(geom)
    m = CoverDivisorClass(0, SurfaceDivisorClass(1, 3 * geom.a - geom.e - 2))
    h = k_y - E0
    return {"H": h, "M": m, "E0": E0, "K_Y": k_y, "3H-K_Y": 3 * h - k_y}


def geometric_genus(geom: BundleGeometry) -> int:
    """p_g(Y) = h^0(P, K_P + L), pushed down to Sigma_e as two line-bundle summands."""
    e = as_int(geom.e)
    twist = SurfaceDivisorClass(1, 3 * as_int(geom.a) - e - 2)
    concrete = BundleGeometry(e, as_int(geom.a))
    return h0(twist, e) + h0(twist + concrete.d0, e)


def curve_probes(geom: BundleGeometry) -> dict[str, Coefficient]:
    """Pair H, M, E0, K_Y, 3H-K_Y with the probe curves C, l_E0, s_E0.

    C is a fiber of Y -> Sigma_e: pullbacks from Sigma_e meet it trivially
    and E0 is a section, so X.C = mu. Curves inside E0 are paired through
    the restriction to E0.
    """
    table: dict[str, Coefficient] = {}
    for name, d in named_classes(geom).items():
        restricted = restrict_to_E0(d, geom)
        table[f"{name}.C"] = d.mu
        table[f"{name}.l_E0"] = intersect(restricted, FIBER, geom.e)
        table[f"{name}.s_E0"] = intersect(restricted, SECTION_CLASS, geom.e)
    return table


@dataclass(frozen=True)
class PushforwardData:
    """phi_* omega_{Y/Sigma_e} = twist + (twist + d0), with degrees on (s, l)."""

    twist: SurfaceDivisorClass
    summands: tuple[SurfaceDivisorClass, SurfaceDivisorClass]
    degrees: tuple[tuple[Coefficient, Coefficient], tuple[Coefficient, Coefficient]]


def pushforward_dualizing(geom: BundleGeometry) -> PushforwardData:
    omega = canonical_class_Y(geom) - CoverDivisorClass(0, canonical_class(geom.e))
    # omega = psi^*(E + tau^*twist), and tau_* O_P(E) is the rank-2 bundle itself
    if not is_zero(omega.mu - 2):
        raise CertificateError(f"relative dualizing class has E0-coefficient {omega.mu}")
    twist = omega.base
    summands = (twist, twist + geom.d0)
    degrees = tuple(
        (restriction_degree_to_section(c, geom.e), intersect(c, FIBER, geom.e)) for c in summands
    )
    return PushforwardData(twist, summands, degrees)


def _k_from_M(geom: BundleGeometry) -> Coefficient:
    # M|_E0 = s + (e + k)l
    m = named_classes(geom)["M"]
    return restrict_to_E0(m, geom).beta - geom.e


def branch_checks(geom: BundleGeometry) -> dict[str, bool]:
    data = CoverData(geom)
    e, a = geom.e, geom.a
    k = 3 * a - 2 * e - 2
    pg_formula = 6 * a - 3 * e - 2
    expected_summands = (SurfaceDivisorClass(3, 3 * a), SurfaceDivisorClass(1, a))
    checks = {
        "branch_is_twice_L": data.branch_class == 2 * data.half_class,
        "T_disjoint_from_E": restrict_to_E(data.T_class, geom).is_zero(),
        "twice_E0_restricts_to_d0": restrict_to_E0(2 * E0, geom) == geom.d0,
        "K_Y_is_pullback_of_K_P_plus_L": pullback(canonical_class_P(geom) + data.half_class)
        == canonical_class_Y(geom),
        "k_from_M_restriction": is_zero(_k_from_M(geom) - k),
        "pg_from_k": is_zero(2 * k + e + 2 - pg_formula),
        "pushforward_summands": pushforward_dualizing(geom).summands == expected_summands,
    }
    if not isinstance(e, Poly) and not isinstance(a, Poly):
        checks["pg_matches_geometric_genus"] = geometric_genus(geom) == pg_formula
    return checks


@dataclass
class ConstructionCertificate:
    e: int
    a: int
    K_cubed: int
    p_g: int
    k: int
    deg_Sigma: int
    E0_cubed: int
    H2E0: int
    HME0: int
    M2E0: int
    H_restricted_to_E0: SurfaceDivisorClass
    E0_restricted_to_E0: SurfaceDivisorClass
    M_restricted_to_E0: SurfaceDivisorClass
    T_restricted_to_E: SurfaceDivisorClass
    pushforward_summands: tuple[SurfaceDivisorClass, SurfaceDivisorClass]
    noether_slack: Fraction
    curve_probe_table: dict[str, int]
    region: str | None = None
    kobayashi_subfamily: bool | None = None
    g_C: int = GENUS_OF_C
    pushforward_degrees: tuple = ()
    branch_checks: dict[str, bool] = field(default_factory=dict)
    ampleness: dict = field(default_factory=dict)

    @property
    def checks_pass(self) -> bool:
        return all(self.branch_checks.values()) and self.noether_slack == 0

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "a": self.a,
            "K_cubed": self.K_cubed,
            "p_g": self.p_g,
            "k": self.k,
            "deg_Sigma": self.deg_Sigma,
            "E0_cubed": self.E0_cubed,
            "H2E0": self.H2E0,
            "HME0": self.HME0,
            "M2E0": self.M2E0,
            "H_restricted_to_E0": self.H_restricted_to_E0.to_json(),
            "E0_restricted_to_E0": self.E0_restricted_to_E0.to_json(),
            "M_restricted_to_E0": self.M_restricted_to_E0.to_json(),
            "T_restricted_to_E": self.T_restricted_to_E.to_json(),
            "pushforward_summands": [c.to_json() for c in self.pushforward_summands],
            "noether_slack": {"num": self.noether_slack.numerator, "den": self.noether_slack.denominator},
            "curve_probe_table": dict(self.curve_probe_table),
            "region": self.region,
            "kobayashi_subfamily": self.kobayashi_subfamily,
            "g_C": self.g_C,
            "pushforward_degrees": [list(d) for d in self.pushforward_degrees],
            "branch_checks": dict(self.branch_checks),
            "ampleness": dict(self.ampleness),
        }


def _ampleness(geom: BundleGeometry, classes: dict, probes: dict, K_cubed: int) -> dict:
    """Necessary conditions for ampleness of K_X and 3H - K_Y; not a full Nakai check."""
    e = geom.e
    plus = classes["3H-K_Y"]
    return {
        "label": "partial certificate",
        "H_cubed_positive": K_cubed > 0,
        "H_restricted_to_E0_nef": is_nef(restrict_to_E0(classes["H"], geom), e),
        "M_restricted_to_E0_very_ample": is_very_ample(restrict_to_E0(classes["M"], geom), e),
        "H_zero_only_on_l_E0": probes["H.l_E0"] == 0 and probes["H.C"] > 0 and probes["H.s_E0"] > 0,
        "3H-K_Y_positive_on_probes": all(probes[f"3H-K_Y.{c}"] > 0 for c in ("C", "l_E0", "s_E0")),
        "3H-K_Y_cubed_positive": triple_intersect_Y(plus, plus, plus, geom) > 0,
    }


def build_certificate(e: int, a: int, region: str | None = None,
                      kobayashi: bool | None = None) -> ConstructionCertificate:
    """Compute every invariant of the construction at a concrete pair (e, a)."""
    if e < 0:
        raise ValueError(f"e must be >= 0, got {e}")
    geom = BundleGeometry(e, a)
    c = named_classes(geom)
    h, m, e0 = c["H"], c["M"], c["E0"]
    K_cubed = triple_intersect_Y(h, h, h, geom)
    p_g = geometric_genus(geom)
    k = as_int(_k_from_M(geom))
    probes = curve_probes(geom)
    push = pushforward_dualizing(geom)
    return ConstructionCertificate(
        e=e,
        a=a,
        K_cubed=K_cubed,
        p_g=p_g,
        k=k,
        deg_Sigma=2 * k + e,
        E0_cubed=triple_intersect_Y(e0, e0, e0, geom),
        H2E0=triple_intersect_Y(h, h, e0, geom),
        HME0=triple_intersect_Y(h, m, e0, geom),
        M2E0=triple_intersect_Y(m, m, e0, geom),
        H_restricted_to_E0=restrict_to_E0(h, geom),
        E0_restricted_to_E0=restrict_to_E0(e0, geom),
        M_restricted_to_E0=restrict_to_E0(m, geom),
        T_restricted_to_E=restrict_to_E(CoverData(geom).T_class, geom),
        pushforward_summands=push.summands,
        noether_slack=K_cubed - Fraction(4 * p_g - 10, 3),
        curve_probe_table=probes,
        region=region,
        kobayashi_subfamily=kobayashi,
        pushforward_degrees=push.degrees,
        branch_checks=branch_checks(geom),
        ampleness=_ampleness(geom, c, probes, K_cubed),
    )
