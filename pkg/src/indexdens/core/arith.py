"""
Elementary arithmetic shared by every layer.

Factorisation goes through sympy (trial division, then Pollard rho and
p-1 above the trial bound); prime lists and smallest-factor tables are
numpy sieves.
"""

import logging
import math
from functools import lru_cache, reduce
from typing import Optional

import numpy as np
from sympy import divisors as _sympy_divisors
from sympy import factorint, isprime

from indexdens.core.errors import FactorizationError, PreconditionError

logger = logging.getLogger(__name__)

MAX_FACTOR_BITS = 256
TRIAL_DIVISION_LIMIT = 10**6


# ==================== Factorisation ====================


@lru_cache(maxsize=4096)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    factors = factorint(n, limit=None)
    for p in factors:
        if not isprime(p):
            raise FactorizationError(f"Could not split composite factor {p} of {n}")
    return tuple(sorted(factors.items()))


def factorize(n: int) -> dict[int, int]:
    """
    Factor a positive integer.

    Args:
        n: Integer to factor

    Returns:
        Mapping prime -> exponent, ascending; empty for n = 1

    Raises:
        PreconditionError: If n < 1
        FactorizationError: If n is too large or a factor cannot be split

    Example:
        >>> factorize(999999)
        {3: 3, 7: 1, 11: 1, 13: 1, 37: 1}
    """
    if n < 1:
        raise PreconditionError(f"Cannot factor {n}; need n >= 1")
    if n == 1:
        return {}
    if n.bit_length() > MAX_FACTOR_BITS:
        raise FactorizationError(f"{n} exceeds the {MAX_FACTOR_BITS}-bit factorisation limit")
    return dict(_factor_cached(n))


def factor_multiset(n: int) -> list[int]:
    """Prime factors of n with multiplicity, ascending."""
    return [p for p, e in factorize(n).items() for _ in range(e)]


def prime_divisors(n: int) -> list[int]:
    return list(factorize(n))


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def squarefree_kernel(n: int) -> int:
    """Product of the distinct primes dividing n (kappa(n))."""
    return reduce(lambda acc, p: acc * p, factorize(n), 1)


def divisors(n: int) -> list[int]:
    if n < 1:
        raise PreconditionError(f"divisors need n >= 1, got {n}")
    return [int(g) for g in _sympy_divisors(n)]


def gcd_infty(x: int, y: int) -> int:
    """
    Largest divisor of x composed only of primes dividing y.

    Example:
        >>> gcd_infty(360, 6)
        72
    """
    if x < 1 or y < 1:
        raise PreconditionError("gcd_infty needs positive arguments")
    result = 1
    g = math.gcd(x, y)
    while g > 1:
        x //= g
        result *= g
        g = math.gcd(x, g)
    return result


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def p_adic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise PreconditionError("valuation of zero is undefined")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


# ==================== Sieves ====================


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (odd-only sieve of Eratosthenes)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(limit // 2 + 1, dtype=bool)
    sieve[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if sieve[i]:
            p = 2 * i + 1
            sieve[p * p // 2 :: p] = False
    odd = 2 * np.nonzero(sieve)[0] + 1
    odd = odd[odd <= limit]
    return np.concatenate((np.array([2], dtype=np.int64), odd.astype(np.int64)))


@lru_cache(maxsize=8)
def first_primes(count: int) -> np.ndarray:
    """The first `count` primes as a read-only int64 array."""
    if count < 1:
        raise PreconditionError("count must be at least 1")
    if count < 6:
        bound = 15
    else:
        bound = int(count * (math.log(count) + math.log(math.log(count)))) + 3
    primes = primes_up_to(bound)
    while len(primes) < count:
        bound *= 2
        primes = primes_up_to(bound)
    result = primes[:count].copy()
    result.flags.writeable = False
    logger.debug(f"Sieved {count} primes up to {bound}")
    return result


def nth_prime(k: int) -> int:
    """The k-th prime, 1-indexed (nth_prime(1) == 2)."""
    return int(first_primes(k)[-1])


def smallest_factor_table(limit: int) -> np.ndarray:
    """spf[n] = smallest prime factor of n for 2 <= n <= limit."""
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in primes_up_to(math.isqrt(limit)):
        p = int(p)
        block = spf[p * p :: p]
        untouched = block == np.arange(p * p, limit + 1, p)
        block[untouched] = p
    return spf


def factor_with_table(n: int, spf: Optional[np.ndarray]) -> dict[int, int]:
    """Factor n with a smallest-factor table, falling back to factorize beyond it."""
    if spf is None or n >= len(spf):
        return factorize(n)
    factors: dict[int, int] = {}
    while n > 1:
        p = int(spf[n])
        factors[p] = factors.get(p, 0) + 1
        n //= p
    return factors


def merge_factorizations(*parts: dict[int, int]) -> dict[int, int]:
    merged: dict[int, int] = {}
    for part in parts:
        for p, e in part.items():
            merged[p] = merged.get(p, 0) + e
    return dict(sorted(merged.items()))
