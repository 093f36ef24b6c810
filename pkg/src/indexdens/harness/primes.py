"""
Prime ideals of Q or Q(sqrt D) up to a norm bound.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from sympy import jacobi_symbol, sqrt_mod

from indexdens.core.arith import primes_up_to
from indexdens.core.errors import PreconditionError
from indexdens.core.types import PrimeBehaviour
from indexdens.harness.fields import QuadraticFieldSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeRecord:
    """
    One prime ideal of norm p or p^2.

    Attributes:
        p: Rational prime below the ideal
        behaviour: Splitting type of p
        norm: p^f
        sqrt_d: Image of sqrt D in F_p for split primes
        omega: Image of the basis element w in F_p for split primes
    """

    p: int
    behaviour: PrimeBehaviour
    norm: int
    sqrt_d: Optional[int] = None
    omega: Optional[int] = None

    @property
    def residue_degree(self) -> int:
        return 2 if self.behaviour == PrimeBehaviour.INERT else 1

    @property
    def ramified(self) -> bool:
        return self.behaviour == PrimeBehaviour.RAMIFIED


def kronecker_symbol(discriminant: int, p: int) -> int:
    """
    (disc / p) for a prime p.

    For p = 2 this is 1 when disc = 1 mod 8, -1 when disc = 5 mod 8 and 0 for even disc.
    """
    if p == 2:
        if discriminant % 2 == 0:
            return 0
        return 1 if discriminant % 8 == 1 else -1
    return int(jacobi_symbol(discriminant % p, p))


def _split_roots(field: QuadraticFieldSpec, p: int) -> list[tuple[int, int]]:
    """(sqrt D mod p, w mod p) for both primes above a split p, sorted."""
    D = field.D
    if D is None:
        raise PreconditionError("Q has no split primes")
    c1, _ = field.omega_relation
    if p == 2:
        # only D = 1 mod 8 splits at 2: w^2 = w + c0 with c0 even, so w = 0 or 1
        return sorted((1, w) for w in (0, 1))
    s = int(sqrt_mod(D % p, p))
    pairs = []
    for root in sorted({s, (p - s) % p}):
        omega = (1 + root) * pow(2, -1, p) % p if c1 == 1 else root
        pairs.append((root, omega))
    return pairs


def records_for_prime(field: QuadraticFieldSpec, p: int, x: int) -> list[PrimeRecord]:
    """All prime ideals above p of norm at most x."""
    if field.is_rational:
        return [PrimeRecord(p, PrimeBehaviour.RATIONAL, p)] if p <= x else []
    symbol = kronecker_symbol(field.discriminant, p)
    if symbol == 0:
        return [PrimeRecord(p, PrimeBehaviour.RAMIFIED, p)] if p <= x else []
    if symbol == 1:
        if p > x:
            return []
        return [
            PrimeRecord(p, PrimeBehaviour.SPLIT, p, sqrt_d=root, omega=omega)
            for root, omega in _split_roots(field, p)
        ]
    return [PrimeRecord(p, PrimeBehaviour.INERT, p * p)] if p * p <= x else []


def enumerate_primes(
    field: QuadraticFieldSpec, x: int, primes: Optional[Iterable[int]] = None
) -> Iterator[PrimeRecord]:
    """
    Every prime ideal of norm <= x exactly once, ordered by the prime below.

    Split p gives two records (one per square root of D mod p, in increasing
    order), inert p gives one record of norm p^2 when p^2 <= x, ramified p
    gives one flagged record.

    Raises:
        PreconditionError: If x < 2
    """
    if x < 2:
        raise PreconditionError(f"Norm bound must be at least 2, got {x}")
    source = primes if primes is not None else primes_up_to(x).tolist()
    for p in source:
        yield from records_for_prime(field, int(p), x)
