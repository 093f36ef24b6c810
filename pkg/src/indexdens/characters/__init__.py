"""Dirichlet characters and exact cyclotomic values."""

from indexdens.characters.group import (
    DirichletCharacter,
    UnitGroupStructure,
    build_character_group,
    conjugate,
    evaluate,
    find_character,
    h_chi,
    is_principal,
    multiply,
    power,
    principal_character,
)
from indexdens.characters.roots import CyclotomicValue, ExactRootOfUnity

__all__ = [
    # Values
    "ExactRootOfUnity",
    "CyclotomicValue",
    # Group
    "UnitGroupStructure",
    "DirichletCharacter",
    "build_character_group",
    "principal_character",
    "find_character",
    # Operations
    "evaluate",
    "h_chi",
    "conjugate",
    "multiply",
    "power",
    "is_principal",
]
