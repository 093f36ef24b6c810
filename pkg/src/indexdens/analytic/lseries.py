"""
Dirichlet L-values at integers s >= 2.

L(s, chi) = d^-s * sum_{a=1}^{d} chi(a) zeta(s, a/d); the direct partial sum
with its integral tail bound is kept alongside as an independent path.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpc, mpf

from indexdens.analytic.hurwitz import hurwitz_zeta
from indexdens.characters.group import DirichletCharacter, evaluate
from indexdens.core.errors import PreconditionError
from indexdens.core.values import BigComplexValue, BigRealValue

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def dirichlet_L(s: int, chi: DirichletCharacter, precision: int) -> BigComplexValue:
    """
    L(s, chi) with a rigorous radius.

    Args:
        s: Integer argument, at least 2
        chi: Character modulo d
        precision: Target bits

    Raises:
        PreconditionError: If s < 2

    Example:
        >>> from indexdens.characters import find_character
        >>> catalan = dirichlet_L(2, find_character(4, "chi(3)=-1"), 128)
        >>> round(float(catalan.real), 12)
        0.915965594177
    """
    if s < 2:
        raise PreconditionError(f"dirichlet_L needs s >= 2, got {s}")
    d = chi.modulus
    wp = precision + 16 + d.bit_length()
    total = BigComplexValue.zero(wp)
    for a in range(1, d + 1):
        if math.gcd(a, d) != 1:
            continue
        zeta_value = hurwitz_zeta(s, Fraction(a, d), wp)
        total = total + evaluate(chi, a).to_ball(wp) * zeta_value
    scale = BigRealValue.from_number(Fraction(1, d**s), wp)
    result = total * scale
    logger.debug(f"L({s}, {chi.label}) radius {mp.nstr(result.radius, 5)}")
    return result


def dirichlet_L_direct(
    s: int, chi: DirichletCharacter, terms: int, precision: int = 128
) -> BigComplexValue:
    """
    Partial sum of chi(n) n^-s over n <= terms, with radius T^(1-s)/(s-1) for the tail.

    Raises:
        PreconditionError: If s < 2 or terms < 1
    """
    if s < 2:
        raise PreconditionError(f"dirichlet_L_direct needs s >= 2, got {s}")
    if terms < 1:
        raise PreconditionError("terms must be at least 1")
    d = chi.modulus
    wp = precision + 16
    with mp.workprec(wp):
        residues = [evaluate(chi, a) for a in range(d)]
        values = [None if z.is_zero else z.to_complex(wp) for z in residues]
        total = mpc(0)
        for n in range(1, terms + 1):
            z = values[n % d]
            if z is not None:
                total += z * mpf(n) ** (-s)
        tail = mpf(terms) ** (1 - s) / (s - 1)
        rounding = (abs(total) + 2) * (terms + 2) * mpf(2) ** (2 - wp)
    return BigComplexValue(total, tail + rounding, wp)
