"""Exact symbolic dynamics of intermediate beta-transformations.

x -> beta*x + alpha mod 1 with beta in (1, 2) algebraic and alpha in Q(beta):
kneading invariants, the lexicographic shift spaces they define, finite-type
classification, transitivity regions and the family beta_{n,k}.
"""
from .constructions import FamilyIndex, family_beta, family_params, multinacci, xi_word
from .dynamics import Params, Status, Variant, kneading_pair, project, tau_expansion
from .exactnum import AlgebraicReal, FieldElement, IntPoly
from .shifts import KneadingSpec, Space, Verdict, classify, classify_extended, forbidden_words, language
from .spectra import perron_check, pisot_check, pm1_witness_search
from .transitivity import RegionId, in_region, region_bounds, transitivity_verdict
from .words import EPWord

__version__ = "0.1.0"

__all__ = [
    "AlgebraicReal",
    "EPWord",
    "FamilyIndex",
    "FieldElement",
    "IntPoly",
    "KneadingSpec",
    "Params",
    "RegionId",
    "Space",
    "Status",
    "Variant",
    "Verdict",
    "classify",
    "classify_extended",
    "family_beta",
    "family_params",
    "forbidden_words",
    "in_region",
    "kneading_pair",
    "language",
    "multinacci",
    "perron_check",
    "pisot_check",
    "pm1_witness_search",
    "project",
    "region_bounds",
    "tau_expansion",
    "transitivity_verdict",
    "xi_word",
]
