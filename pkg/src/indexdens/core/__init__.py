"""Core types, values and arithmetic for indexdens."""

from indexdens.core.arith import (
    divisors,
    euler_phi,
    factor_multiset,
    factorize,
    first_primes,
    gcd_infty,
    mobius,
    nth_prime,
    primes_up_to,
    squarefree_kernel,
)
from indexdens.core.errors import (
    FactorizationError,
    GeneratorParseError,
    ImaginaryResidualError,
    InconsistentModelError,
    IndexDensError,
    ModulusMismatchError,
    PreconditionError,
    SelectorError,
    ValidityConditionError,
)
from indexdens.core.settings import DEFAULT_PRECISION, DEFAULT_TERMS, ComputeSettings
from indexdens.core.types import ExclusionConvention, OutputFormat, Positivity, PrimeBehaviour
from indexdens.core.values import BigComplexValue, BigRealValue

__all__ = [
    # Values
    "BigRealValue",
    "BigComplexValue",
    # Settings
    "ComputeSettings",
    "DEFAULT_PRECISION",
    "DEFAULT_TERMS",
    # Types
    "Positivity",
    "PrimeBehaviour",
    "ExclusionConvention",
    "OutputFormat",
    # Arithmetic
    "factorize",
    "factor_multiset",
    "euler_phi",
    "mobius",
    "squarefree_kernel",
    "divisors",
    "gcd_infty",
    "primes_up_to",
    "first_primes",
    "nth_prime",
    # Errors
    "IndexDensError",
    "PreconditionError",
    "ValidityConditionError",
    "ModulusMismatchError",
    "SelectorError",
    "GeneratorParseError",
    "InconsistentModelError",
    "ImaginaryResidualError",
    "FactorizationError",
]
