"""Admissible parameter pairs (e, a), enumeration, and the Noether-line chain audit."""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .doublecover import CertificateError, ConstructionCertificate, build_certificate

__all__ = [
    "Region",
    "AdmissibilityClass",
    "ADMISSIBLE",
    "classify",
    "noether_membership",
    "certify",
    "enumerate_certificates",
    "ChainLink",
    "ChainAuditReport",
    "audit_noether_chain",
]


class Region(str, enum.Enum):
    REGION_A = "RegionA"  # a >= e >= 3
    REGION_B = "RegionB"  # 1 <= e <= 2, a >= e + 1
    REGION_C = "RegionC"  # e = 0, a >= 2
    BOUNDARY_01 = "BoundaryPair01"
    INADMISSIBLE = "Inadmissible"


ADMISSIBLE = frozenset({Region.REGION_A, Region.REGION_B, Region.REGION_C})


@dataclass(frozen=True)
class AdmissibilityClass:
    region: Region
    kobayashi_subfamily: bool

    def __post_init__(self):
        if self.kobayashi_subfamily and self.region is not Region.REGION_A:
            raise ValueError("the Kobayashi subfamily lies inside RegionA")

    @property
    def admissible(self) -> bool:
        return self.region in ADMISSIBLE


def classify(e: int, a: int) -> AdmissibilityClass:
    if e < 0:
        raise ValueError(f"e must be >= 0, got {e}")
    if a >= e >= 3:
        region = Region.REGION_A
    elif 1 <= e <= 2 and a >= e + 1:
        region = Region.REGION_B
    elif e == 0 and a >= 2:
        region = Region.REGION_C
    elif (e, a) == (0, 1):
        region = Region.BOUNDARY_01
    else:
        region = Region.INADMISSIBLE
    return AdmissibilityClass(region, region is Region.REGION_A and a == e)


def noether_membership(K_cubed: int, p_g: int) -> Fraction:
    """K^3 - (4 p_g - 10)/3; zero exactly on the Noether line."""
    return K_cubed - Fraction(4 * p_g - 10, 3)


def certify(e: int, a: int, *, explore: bool = False) -> ConstructionCertificate:
    """Certificate for (e, a) with region data, verified.

    Admissible pairs must pass every branch check, sit on the Noether line
    and have p_g >= 7. With ``explore`` nothing raises; a failing pair comes
    back with ``checks_pass`` False, so pairs outside the classified region
    can be inspected.
    """
    cls = classify(e, a)
    cert = build_certificate(e, a, region=cls.region.value, kobayashi=cls.kobayashi_subfamily)
    problems = [f"failed checks {[n for n, ok in cert.branch_checks.items() if not ok]}"] \
        if not all(cert.branch_checks.values()) else []
    if cert.noether_slack != noether_membership(cert.K_cubed, cert.p_g):
        problems.append("inconsistent slack")
    if cert.noether_slack != 0:
        problems.append(f"off the Noether line, slack {cert.noether_slack}")
    if cert.deg_Sigma != cert.p_g - 2:
        problems.append(f"deg Sigma {cert.deg_Sigma} != p_g - 2")
    if cls.admissible and cert.p_g < 7:
        problems.append(f"admissible pair with p_g = {cert.p_g} < 7")
    if problems and not explore:
        raise CertificateError(f"({e}, {a}): " + "; ".join(problems))
    return cert


def enumerate_certificates(e_range: Iterable[int], a_range: Iterable[int],
                           regions: Iterable[Region] = ADMISSIBLE,
                           *, explore: bool = False) -> list[ConstructionCertificate]:
    """One verified certificate per pair whose region is in ``regions``, in (e, a) order."""
    wanted = frozenset(regions)
    a_values = sorted(set(a_range))
    out = []
    for e in sorted(set(e_range)):
        for a in a_values:
            if classify(e, a).region in wanted:
                out.append(certify(e, a, explore=explore))
    return out


@dataclass(frozen=True)
class ChainLink:
    name: str
    left: Fraction
    right: Fraction

    @property
    def slack(self) -> Fraction:
        return self.left - self.right

    @property
    def tight(self) -> bool:
        return self.slack == 0

    @property
    def holds(self) -> bool:
        return self.slack >= 0


@dataclass(frozen=True)
class ChainAuditReport:
    links: tuple[ChainLink, ...]

    @property
    def all_tight(self) -> bool:
        return all(link.tight for link in self.links)

    @property
    def on_noether_line(self) -> bool:
        return self.all_tight

    def link(self, name: str) -> ChainLink:
        for item in self.links:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_json(self) -> list[dict]:
        return [
            {
                "name": link.name,
                "left": str(link.left),
                "right": str(link.right),
                "slack": {"num": link.slack.numerator, "den": link.slack.denominator},
                "tight": link.tight,
            }
            for link in self.links
        ]


def audit_noether_chain(p_g: int, d_sigma: int, gamma_degree: Fraction | int,
                        remainder: Fraction | int = 0) -> ChainAuditReport:
    """Slack of each numeric link in the Noether-inequality chain.

    ``gamma_degree`` is the degree of the canonical class restricted to the
    horizontal section curve; ``remainder`` aggregates the nonnegative
    vertical and fixed-part contributions (zero on the line).
    """
    if p_g < 3:
        raise ValueError(f"chain audit needs p_g >= 3, got {p_g}")
    gamma = Fraction(gamma_degree)
    remainder = Fraction(remainder)
    if remainder < 0:
        raise ValueError("remainder terms are nonnegative")
    return ChainAuditReport((
        ChainLink("degree_bound", Fraction(d_sigma), Fraction(p_g - 2)),
        ChainLink("gamma_bound", gamma, Fraction(d_sigma - 2, 3)),
        ChainLink("noether_bound", d_sigma + gamma + remainder, Fraction(4 * p_g - 10, 3)),
    ))
