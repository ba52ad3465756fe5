"""Exact invariants of canonically polarized 3-folds on the Noether line K^3 = (4/3)p_g - 10/3.

The construction is parametrized by integer pairs (e, a): a double cover of a
P^1-bundle over the Hirzebruch surface Sigma_e.
"""

from .doublecover import ConstructionCertificate, build_certificate
from .exactring import Poly, parse, render
from .family import Region, audit_noether_chain, certify, classify, enumerate_certificates, noether_membership

__all__ = [
    "ConstructionCertificate",
    "Poly",
    "Region",
    "audit_noether_chain",
    "build_certificate",
    "certify",
    "classify",
    "enumerate_certificates",
    "noether_membership",
    "parse",
    "render",
]
