"""Empirical index counts over prime ideals of Q and real quadratic fields."""

from indexdens.harness.counting import CountReport, count, index_at_prime, reduce_element
from indexdens.harness.fields import FieldElement, GroupSpec, QuadraticFieldSpec, parse_element
from indexdens.harness.primes import PrimeRecord, enumerate_primes, kronecker_symbol
from indexdens.harness.residue import (
    PrimeField,
    QuadraticExtensionField,
    ResidueField,
    multiplicative_order,
)

__all__ = [
    # Fields
    "QuadraticFieldSpec",
    "FieldElement",
    "GroupSpec",
    "parse_element",
    # Primes
    "PrimeRecord",
    "enumerate_primes",
    "kronecker_symbol",
    # Residue fields
    "ResidueField",
    "PrimeField",
    "QuadraticExtensionField",
    "multiplicative_order",
    # Counting
    "CountReport",
    "count",
    "index_at_prime",
    "reduce_element",
]
