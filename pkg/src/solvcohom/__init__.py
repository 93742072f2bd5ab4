"""
solvcohom: double complexes of splitting-type solvmanifolds.

Builds the finite complexes B, C = B + B̄ and B ∧ B̄ for the families g1, g2
and g8, computes their Dolbeault, Bott-Chern, Aeppli and de Rham
cohomology exactly over ℚ(i), decomposes them into squares and zigzags and
decides formality, including triple Aeppli-Bott-Chern-Massey products.
"""

__version__ = "0.1.0"

from .bicomplex import Bicomplex, conjugate, direct_sum, shape_complex, validate
from .builder import build_B, build_C, build_closure, preset
from .cohomology import Flavor, aeppli, bott_chern, conj_dolbeault, ddbar_lemma, de_rham, dolbeault
from .decomposition import Decomposition, cohomology_counts, decompose, page1_check
from .formality import formality_report, massey_abc, raw_formality_report, strong_formality
from .scalar import GaussianRational

__all__ = [
    "Bicomplex",
    "Decomposition",
    "Flavor",
    "GaussianRational",
    "aeppli",
    "bott_chern",
    "build_B",
    "build_C",
    "build_closure",
    "cohomology_counts",
    "conj_dolbeault",
    "conjugate",
    "ddbar_lemma",
    "de_rham",
    "decompose",
    "direct_sum",
    "dolbeault",
    "formality_report",
    "massey_abc",
    "page1_check",
    "preset",
    "raw_formality_report",
    "shape_complex",
    "strong_formality",
    "validate",
]
