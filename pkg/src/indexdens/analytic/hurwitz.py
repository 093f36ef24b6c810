"""
Hurwitz zeta at integer arguments by Euler-Maclaurin summation.

zeta(s, x) = sum_{k<N} (k+x)^-s + a^(1-s)/(s-1) + a^-s/2
             + sum_{j=1}^{M} B_2j/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1),   a = N + x.

For real s > 1 the remainder after M correction terms is bounded by the
first omitted term; twice that bound is attached as the truncation radius.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

from mpmath import mp, mpf
from sympy import bernoulli as _sympy_bernoulli

from indexdens.core.errors import PreconditionError
from indexdens.core.values import BigRealValue, fraction_to_mpf

logger = logging.getLogger(__name__)

GUARD_BITS = 32
MAX_CORRECTION_TERMS = 2000


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n as an exact rational."""
    value = _sympy_bernoulli(n)
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def _correction_coefficient(s: int, j: int) -> Fraction:
    """B_2j / (2j)! * s (s+1) ... (s+2j-2)."""
    rising = math.prod(range(s, s + 2 * j - 1))
    return bernoulli_number(2 * j) * Fraction(rising, math.factorial(2 * j))


def _euler_maclaurin(s: int, x: Fraction, n_direct: int, wp: int) -> tuple[mpf, mpf, int]:
    """One attempt at cut-off n_direct; returns (value, truncation bound, terms) or raises."""
    eps = mpf(2) ** (-wp)
    x_mpf = fraction_to_mpf(x)
    total = mpf(0)
    for k in range(n_direct):
        total += (k + x_mpf) ** (-s)
    a = n_direct + x_mpf
    total += a ** (1 - s) / (s - 1) + a ** (-s) / 2
    inv_a2 = 1 / (a * a)
    a_power = a ** (-s - 1)
    previous = None
    for j in range(1, MAX_CORRECTION_TERMS):
        term = fraction_to_mpf(_correction_coefficient(s, j)) * a_power
        magnitude = abs(term)
        if magnitude < eps:
            return total, 2 * magnitude, j
        if previous is not None and magnitude > previous:
            raise ArithmeticError("correction terms diverge")
        total += term
        previous = magnitude
        a_power *= inv_a2
    raise ArithmeticError("correction terms did not reach the requested tolerance")


@lru_cache(maxsize=4096)
def hurwitz_zeta(s: int, x: Union[int, Fraction], precision: int) -> BigRealValue:
    """
    Hurwitz zeta function zeta(s, x) for integer s >= 2 and rational 0 < x <= 1.

    Args:
        s: Integer argument, at least 2
        x: Rational shift in (0, 1]
        precision: Target bits; the radius ends up below 2^-precision for moderate values

    Returns:
        BigRealValue at `precision` bits

    Raises:
        PreconditionError: If s < 2 or x lies outside (0, 1]

    Example:
        >>> float(hurwitz_zeta(2, Fraction(1), 128))
        1.6449340668482264
    """
    if s < 2:
        raise PreconditionError(f"hurwitz_zeta needs s >= 2, got {s}")
    x = Fraction(x)
    if not 0 < x <= 1:
        raise PreconditionError(f"hurwitz_zeta needs 0 < x <= 1, got {x}")

    wp = precision + GUARD_BITS
    n_direct = max(16, precision // 2, s)
    with mp.workprec(wp):
        while True:
            try:
                value, truncation, corrections = _euler_maclaurin(s, x, n_direct, wp)
                break
            except ArithmeticError:
                n_direct *= 2
                logger.debug(f"Euler-Maclaurin at s={s} diverged; retrying with N={n_direct}")
        rounding = abs(value) * (n_direct + corrections + 4) * mpf(2) ** (2 - wp)
        radius = truncation + rounding
    logger.debug(
        f"hurwitz_zeta(s={s}, x={x}) with N={n_direct}, {corrections} corrections at {wp} bits"
    )
    return BigRealValue(value, radius, precision)


def riemann_zeta(s: int, precision: int) -> BigRealValue:
    """zeta(s) = zeta(s, 1)."""
    return hurwitz_zeta(s, Fraction(1), precision)
