"""
Prime zeta function and rank-r Artin constants.

The prime zeta tail over p > Q comes from Moebius inversion of
log zeta_Q(s), where zeta_Q drops the Euler factors at p <= Q. The Artin
constant A_r = prod_p (1 - 1/(p^r (p-1))) is evaluated as an exact product
over p <= Q times exp(sum_s c_s P_Q(s)), the coefficients c_s coming from
the power series of log(1 - x^(r+1)/(1-x)).
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np
from mpmath import mp, mpf

from indexdens.analytic.hurwitz import riemann_zeta
from indexdens.core.arith import mobius, primes_up_to
from indexdens.core.errors import PreconditionError
from indexdens.core.values import BigRealValue

logger = logging.getLogger(__name__)

DEFAULT_CUTOFF = 100
MIN_ARTIN_CUTOFF = 5


def _small_primes(cutoff: int) -> list[int]:
    return [int(p) for p in primes_up_to(cutoff)]


def _log_zeta_without_small_primes(sigma: int, primes: list[int], wp: int) -> BigRealValue:
    """log( zeta(sigma) * prod_{p in primes} (1 - p^-sigma) )."""
    zeta_value = riemann_zeta(sigma, wp)
    with mp.workprec(wp):
        product = mpf(1)
        for p in primes:
            product *= 1 - mpf(p) ** (-sigma)
        rounding = product * (2 * len(primes) + 1) * mpf(2) ** (2 - wp)
    return (zeta_value * BigRealValue(product, rounding, wp)).log()


@lru_cache(maxsize=1024)
def prime_zeta_tail(s: int, cutoff: int, precision: int) -> BigRealValue:
    """
    Sum of p^-s over primes p > cutoff.

    The Moebius series is cut at the first K with 2 Q^(1-(K+1)s) below
    2^-precision; that bound is added to the radius.

    Raises:
        PreconditionError: If s < 2 or cutoff < 2
    """
    if s < 2:
        raise PreconditionError(f"prime zeta needs s >= 2, got {s}")
    if cutoff < 2:
        raise PreconditionError(f"cutoff must be at least 2, got {cutoff}")
    wp = precision + 16
    primes = _small_primes(cutoff)
    total = BigRealValue.zero(wp)
    with mp.workprec(wp):
        eps = mpf(2) ** (-wp)
        k = 0
        while True:
            k += 1
            mu = mobius(k)
            if mu != 0:
                term = _log_zeta_without_small_primes(k * s, primes, wp + 8)
                total = total + term * Fraction(mu, k)
            remainder = 2 * mpf(cutoff) ** (1 - (k + 1) * s)
            if remainder < eps:
                break
    logger.debug(f"prime_zeta_tail(s={s}, Q={cutoff}) used {k} Moebius terms")
    return BigRealValue(total.value, total.radius + remainder, wp)


def prime_zeta(s: int, precision: int, cutoff: int = DEFAULT_CUTOFF) -> BigRealValue:
    """
    P(s) = sum over all primes of p^-s.

    Example:
        >>> round(float(prime_zeta(2, 128)), 15)
        0.452247420041065
    """
    tail = prime_zeta_tail(s, cutoff, precision)
    wp = tail.precision
    with mp.workprec(wp):
        head = mpf(0)
        primes = _small_primes(cutoff)
        for p in primes:
            head += mpf(p) ** (-s)
        rounding = head * (2 * len(primes) + 1) * mpf(2) ** (2 - wp)
    return BigRealValue(head, rounding, wp) + tail


@lru_cache(maxsize=None)
def artin_log_coefficient(r: int, s: int) -> Fraction:
    """
    Coefficient of x^s in log(1 - x^(r+1)/(1-x)).

    Example:
        >>> [artin_log_coefficient(1, s) for s in (2, 3, 4)]
        [Fraction(-1, 1), Fraction(-1, 1), Fraction(-3, 2)]
    """
    total = Fraction(0)
    for m in range(1, s // (r + 1) + 1):
        total -= Fraction(math.comb(s - m * r - 1, m - 1), m)
    return total


def _artin_series_length(cutoff: int, wp: int) -> tuple[int, mpf]:
    """Smallest S whose omitted tail Q (2/Q)^(S+1) / (1 - 2/Q) is below 2^-wp."""
    q = mpf(cutoff)
    ratio = 2 / q
    eps = mpf(2) ** (-wp)
    s_max = 1
    while True:
        tail = q * ratio ** (s_max + 1) / (1 - ratio)
        if tail < eps:
            return s_max, tail
        s_max += 1


@lru_cache(maxsize=128)
def artin_constant(r: int, precision: int, cutoff: int = DEFAULT_CUTOFF) -> BigRealValue:
    """
    Rank-r Artin constant A_r = prod_p (1 - 1/(p^r (p-1))).

    Args:
        r: Rank, at least 1
        precision: Target bits
        cutoff: Primes up to this bound are multiplied directly

    Raises:
        PreconditionError: If r < 1 or cutoff < 5

    Example:
        >>> round(float(artin_constant(1, 128)), 15)
        0.373955813619202
    """
    if r < 1:
        raise PreconditionError(f"rank must be at least 1, got {r}")
    if cutoff < MIN_ARTIN_CUTOFF:
        raise PreconditionError(f"Artin cutoff must be at least {MIN_ARTIN_CUTOFF}")
    wp = precision + 32
    primes = _small_primes(cutoff)
    with mp.workprec(wp):
        head = mpf(0)
        for p in primes:
            head += mpmath.log1p(-1 / (mpf(p) ** r * (p - 1)))
        head_radius = (abs(head) + 1) * (3 * len(primes) + 1) * mpf(2) ** (2 - wp)
        s_max, series_tail = _artin_series_length(cutoff, wp)

    log_value = BigRealValue(head, head_radius + series_tail, wp)
    for s in range(r + 1, s_max + 1):
        c = artin_log_coefficient(r, s)
        if c == 0:
            continue
        log_value = log_value + prime_zeta_tail(s, cutoff, wp + s) * c
    logger.debug(f"A_{r}: {len(primes)} direct primes, prime zeta terms s <= {s_max}")
    return log_value.exp()


def artin_constant_raw(r: int, prime_bound: int) -> BigRealValue:
    """
    Truncated product of A_r over p <= prime_bound.

    The omitted factors lie in [1 - t, 1] with t = 2 X^-r / r, so the radius
    is |value| t plus the double-precision summation error.
    """
    if r < 1:
        raise PreconditionError(f"rank must be at least 1, got {r}")
    if prime_bound < 2:
        raise PreconditionError("prime_bound must be at least 2")
    primes = primes_up_to(prime_bound).astype(np.float64)
    terms = np.log1p(-1.0 / (primes**r * (primes - 1.0)))
    log_sum = math.fsum(terms.tolist())
    with mp.workprec(64):
        value = mpmath.exp(mpf(log_sum))
        float_error = mpf(float(np.abs(terms).sum())) * mpf(2) ** -48
        tail = 2 * mpf(prime_bound) ** (-r) / r
        radius = value * (tail + 2 * float_error)
    return BigRealValue(value, radius, 64)
