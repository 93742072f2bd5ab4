"""
Builders for the complexes B, C and B ∧ B̄ of splitting-type solvmanifolds.
"""

from .cases import (
    CATALOGUE,
    CatalogueCase,
    LatticeDescriptor,
    catalogue_case,
    classify_g1,
    classify_g2,
    classify_g2_alpha0,
    classify_g8,
    flags_to_case,
    is_lattice_compatible,
    preset,
)
from .complexes import (
    ClosureAlgebra,
    build_B,
    build_C,
    build_closure,
    is_conjugation_fixed,
    labels_of,
)
from .salamon import parse_salamon
from .splitting import CaseFlags, Character, Generator, SplittingData, TrivialitySubgroup

__all__ = [
    "CATALOGUE",
    "CaseFlags",
    "CatalogueCase",
    "Character",
    "ClosureAlgebra",
    "Generator",
    "LatticeDescriptor",
    "SplittingData",
    "TrivialitySubgroup",
    "build_B",
    "build_C",
    "build_closure",
    "catalogue_case",
    "classify_g1",
    "classify_g2",
    "classify_g2_alpha0",
    "classify_g8",
    "flags_to_case",
    "is_conjugation_fixed",
    "is_lattice_compatible",
    "labels_of",
    "parse_salamon",
    "preset",
]
