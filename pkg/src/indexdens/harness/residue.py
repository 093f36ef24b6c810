"""
Residue fields F_p and F_{p^2} and multiplicative orders in them.

This defines the interface every residue field implements, so the counting
loop can treat split, rational and inert primes alike.
"""

from abc import ABC, abstractmethod
from typing import Any, Optional

import numpy as np

from indexdens.core.arith import factor_with_table, merge_factorizations
from indexdens.core.errors import PreconditionError


class ResidueField(ABC):
    """
    Abstract finite field F_q.

    Subclasses fix an element representation and implement multiplication
    and powering; multiplicative_order is shared.

    Example:
        >>> field = PrimeField(11)
        >>> field.order_of(8, field.group_order_factors())
        10
    """

    @property
    @abstractmethod
    def q(self) -> int:
        """Number of elements."""
        pass

    @property
    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def mul(self, x: Any, y: Any) -> Any:
        pass

    @abstractmethod
    def power(self, x: Any, exponent: int) -> Any:
        """x^exponent for exponent >= 0."""
        pass

    @abstractmethod
    def group_order_factors(self, spf: Optional[np.ndarray] = None) -> dict[int, int]:
        """Factorisation of q - 1."""
        pass

    def is_one(self, x: Any) -> bool:
        return x == self.one

    def order_of(self, x: Any, factors: dict[int, int]) -> int:
        """Multiplicative order of x, descending from q - 1 one prime at a time."""
        order = self.q - 1
        for ell in factors:
            while order % ell == 0 and self.is_one(self.power(x, order // ell)):
                order //= ell
        return order


class PrimeField(ResidueField):
    """F_p with elements represented by integers in [0, p)."""

    def __init__(self, p: int) -> None:
        if p < 2:
            raise PreconditionError(f"{p} is not a prime")
        self.p = p

    @property
    def q(self) -> int:
        return self.p

    @property
    def one(self) -> int:
        return 1 % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def power(self, x: int, exponent: int) -> int:
        return pow(x, exponent, self.p)

    def group_order_factors(self, spf: Optional[np.ndarray] = None) -> dict[int, int]:
        return factor_with_table(self.p - 1, spf)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class QuadraticExtensionField(ResidueField):
    """
    F_p[X] / (X^2 - c1 X - c0) for an irreducible quadratic.

    Elements are pairs (a, b) meaning a + b X.
    """

    def __init__(self, p: int, c1: int, c0: int) -> None:
        if p < 2:
            raise PreconditionError(f"{p} is not a prime")
        self.p = p
        self.c1 = c1 % p
        self.c0 = c0 % p

    @property
    def q(self) -> int:
        return self.p * self.p

    @property
    def one(self) -> tuple[int, int]:
        return (1 % self.p, 0)

    def mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        a, b = x
        c, d = y
        p = self.p
        bd = b * d
        return ((a * c + bd * self.c0) % p, (a * d + b * c + bd * self.c1) % p)

    def power(self, x: tuple[int, int], exponent: int) -> tuple[int, int]:
        result = self.one
        base = x
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def norm(self, x: tuple[int, int]) -> int:
        a, b = x
        return (a * a + self.c1 * a * b - self.c0 * b * b) % self.p

    def inverse(self, x: tuple[int, int]) -> tuple[int, int]:
        """x^-1 via the conjugate (a + b c1) - b X."""
        n = self.norm(x)
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        inv = pow(n, -1, self.p)
        a, b = x
        return ((a + b * self.c1) * inv % self.p, (-b) * inv % self.p)

    def frobenius(self, x: tuple[int, int]) -> tuple[int, int]:
        return self.power(x, self.p)

    def group_order_factors(self, spf: Optional[np.ndarray] = None) -> dict[int, int]:
        return merge_factorizations(
            factor_with_table(self.p - 1, spf), factor_with_table(self.p + 1, spf)
        )

    def __repr__(self) -> str:
        return f"QuadraticExtensionField({self.p}, X^2 = {self.c1}X + {self.c0})"


def multiplicative_order(field: ResidueField, x: Any, spf: Optional[np.ndarray] = None) -> int:
    """
    Order of x in the multiplicative group of `field`.

    Raises:
        PreconditionError: If x is zero
    """
    if x == 0 or x == (0, 0):
        raise PreconditionError("zero has no multiplicative order")
    return field.order_of(x, field.group_order_factors(spf))
