"""
Artin-type constants B_chi(r).

    B_chi(r) = prod_p ( 1 + p (chi(p) - 1) / ((p - 1)(p^(r+1) - chi(p))) )

The accelerated form multiplies Lambda_r = A_r L(r+1) L(r+2) L(r+3) by the
partial products

    P_k = (1 + z/(p (p^(r+1) - p^r - 1))) (1 - z/p^(r+2)) (1 - z/p^(r+3)),  z = chi(p_k),

over the first n primes; the remaining factor E lies within p_{n+1}^-(r+2)
of modulus 1 when r = 1 and p_{n+1} >= 5, or r >= 2 and p_{n+1} >= 3.

Primes up to `exact_cutoff` are multiplied in mpmath; the rest are summed
as double-precision logarithms in fixed blocks and exponentiated once.
"""

import logging
import math
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np
from mpmath import mp, mpc, mpf

from indexdens.analytic.lseries import dirichlet_L
from indexdens.analytic.primezeta import artin_constant
from indexdens.characters.group import DirichletCharacter, evaluate, is_principal
from indexdens.core.arith import first_primes, nth_prime, prime_divisors, primes_up_to
from indexdens.core.errors import PreconditionError, ValidityConditionError
from indexdens.core.settings import DEFAULT_EXACT_CUTOFF, DEFAULT_PRECISION, DEFAULT_TERMS
from indexdens.core.values import BigComplexValue

logger = logging.getLogger(__name__)

BLOCK_SIZE = 2**17
# per-term relative error allowance of the double-precision tail
_FLOAT_TERM_ERROR = 2.0**-44


@dataclass(frozen=True)
class BChiResult:
    """
    Value of B_chi(r) with its provenance.

    Attributes:
        character: The character chi
        rank: r
        n_terms: Primes used in the partial product
        value: B_chi(r) with radius covering every error source
        e_bound: p_{n+1}^-(r+2), the bound on | |E| - 1 |
        phase_bound_applied: True when the band was also applied to arg E
        exact: True for the principal character (finite rational product)
        rational: The exact value when `exact` is set
    """

    character: DirichletCharacter
    rank: int
    n_terms: int
    value: BigComplexValue
    e_bound: Fraction
    phase_bound_applied: bool
    exact: bool = False
    rational: Optional[Fraction] = None


def _complex_log1p(wr: np.ndarray, wi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Real and imaginary parts of log(1 + w), accurate for small |w|."""
    re = 0.5 * np.log1p(2.0 * wr + wr * wr + wi * wi)
    im = np.arctan2(wi, 1.0 + wr)
    return re, im


class _EulerFactor(ABC):
    """One Euler factor shape, evaluated in mpmath or as numpy logarithms."""

    def __init__(self, r: int) -> None:
        self.r = r

    @abstractmethod
    def mp_factor(self, p: int, z: mpc) -> mpc:
        """The factor at p with chi(p) = z."""

    @abstractmethod
    def np_log(self, p: np.ndarray, zr: np.ndarray, zi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """log of the factor at each p, as (real, imaginary) arrays."""


class _AcceleratedFactor(_EulerFactor):
    def mp_factor(self, p: int, z: mpc) -> mpc:
        r = self.r
        pm = mpf(p)
        return (
            (1 + z / (pm * (pm ** (r + 1) - pm**r - 1)))
            * (1 - z / pm ** (r + 2))
            * (1 - z / pm ** (r + 3))
        )

    def np_log(self, p: np.ndarray, zr: np.ndarray, zi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        r = self.r
        c1 = np.power(p, -(r + 1.0)) / (p - 1.0 - np.power(p, -float(r)))
        c2 = np.power(p, -(r + 2.0))
        c3 = np.power(p, -(r + 3.0))
        re = np.zeros_like(p)
        im = np.zeros_like(p)
        for coefficient in (c1, -c2, -c3):
            part_re, part_im = _complex_log1p(coefficient * zr, coefficient * zi)
            re += part_re
            im += part_im
        return re, im


class _SingleLFactor(_EulerFactor):
    def mp_factor(self, p: int, z: mpc) -> mpc:
        r = self.r
        pm = mpf(p)
        return 1 + z / (pm * (pm ** (r + 1) - pm**r - 1))

    def np_log(self, p: np.ndarray, zr: np.ndarray, zi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        c1 = np.power(p, -(self.r + 1.0)) / (p - 1.0 - np.power(p, -float(self.r)))
        return _complex_log1p(c1 * zr, c1 * zi)


class _RawFactor(_EulerFactor):
    def mp_factor(self, p: int, z: mpc) -> mpc:
        pm = mpf(p)
        return 1 + pm * (z - 1) / ((pm - 1) * (pm ** (self.r + 1) - z))

    def np_log(self, p: np.ndarray, zr: np.ndarray, zi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        # w = (z - 1) / ((p - 1)(p^r - z/p))
        den_r = (p - 1.0) * (np.power(p, float(self.r)) - zr / p)
        den_i = -(p - 1.0) * zi / p
        num_r = zr - 1.0
        num_i = zi
        norm = den_r * den_r + den_i * den_i
        wr = (num_r * den_r + num_i * den_i) / norm
        wi = (num_i * den_r - num_r * den_i) / norm
        return _complex_log1p(wr, wi)


def _character_table(chi: DirichletCharacter) -> tuple[np.ndarray, np.ndarray]:
    d = chi.modulus
    values = [complex(evaluate(chi, a)) for a in range(d)]
    return (
        np.array([v.real for v in values], dtype=np.float64),
        np.array([v.imag for v in values], dtype=np.float64),
    )


def _exact_head(
    chi: DirichletCharacter, primes: np.ndarray, factor: _EulerFactor, wp: int
) -> BigComplexValue:
    """Product of the factors at `primes` in mpmath."""
    with mp.workprec(wp):
        cache: dict[int, mpc] = {}
        acc = mpc(1)
        for p in primes.tolist():
            residue = p % chi.modulus
            z = cache.get(residue)
            if z is None:
                z = evaluate(chi, residue).to_complex(wp)
                cache[residue] = z
            acc *= factor.mp_factor(p, z)
        radius = abs(acc) * 16 * (len(primes) + 1) * mpf(2) ** (1 - wp)
    return BigComplexValue(acc, radius, wp)


def _float_tail(
    chi: DirichletCharacter,
    primes: np.ndarray,
    factor: _EulerFactor,
    wp: int,
    workers: int,
) -> BigComplexValue:
    """exp of the double-precision log-sum of the factors at `primes`."""
    if len(primes) == 0:
        return BigComplexValue.from_number(1, wp)
    table_re, table_im = _character_table(chi)
    blocks = [primes[i : i + BLOCK_SIZE] for i in range(0, len(primes), BLOCK_SIZE)]

    def block_sum(block: np.ndarray) -> tuple[float, float, float]:
        residues = block % chi.modulus
        p = block.astype(np.float64)
        re, im = factor.np_log(p, table_re[residues], table_im[residues])
        magnitude = float(np.abs(re).sum() + np.abs(im).sum())
        return math.fsum(re.tolist()), math.fsum(im.tolist()), magnitude

    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(block_sum, blocks))
    else:
        sums = [block_sum(block) for block in blocks]
    log_re = math.fsum(s[0] for s in sums)
    log_im = math.fsum(s[1] for s in sums)
    error = math.fsum(s[2] for s in sums) * _FLOAT_TERM_ERROR
    logger.debug(f"Double-precision tail over {len(primes)} primes in {len(blocks)} blocks")
    with mp.workprec(wp):
        value = mp.exp(mpc(log_re, log_im))
        radius = abs(value) * mp.expm1(2 * mpf(error))
    return BigComplexValue(value, radius, wp)


def _euler_product(
    chi: DirichletCharacter,
    primes: np.ndarray,
    factor: _EulerFactor,
    wp: int,
    exact_cutoff: int,
    workers: int,
) -> BigComplexValue:
    split = int(np.searchsorted(primes, exact_cutoff, side="right"))
    head = _exact_head(chi, primes[:split], factor, wp)
    tail = _float_tail(chi, primes[split:], factor, wp, workers)
    return head * tail


def check_validity(r: int, n_terms: int) -> int:
    """
    Return p_{n+1}, raising when (r, n_terms) violates the validity condition.

    Raises:
        ValidityConditionError: Unless r = 1 and p_{n+1} >= 5, or r >= 2 and p_{n+1} >= 3
    """
    if r < 1:
        raise ValidityConditionError(f"rank must be at least 1, got {r}")
    if n_terms < 1:
        raise ValidityConditionError(f"n_terms must be at least 1, got {n_terms}")
    next_prime = nth_prime(n_terms + 1)
    needed = 5 if r == 1 else 3
    if next_prime < needed:
        raise ValidityConditionError(
            f"r={r} with n_terms={n_terms} gives p_(n+1)={next_prime}; need at least {needed}"
        )
    return next_prime


def principal_b_chi(d: int, r: int) -> Fraction:
    """B_chi(r) for the principal character mod d: prod_{p | d} (1 - 1/((p-1) p^r))."""
    value = Fraction(1)
    for p in prime_divisors(d):
        value *= 1 - Fraction(1, (p - 1) * p**r)
    return value


@lru_cache(maxsize=256)
def b_chi(
    chi: DirichletCharacter,
    r: int,
    n_terms: int = DEFAULT_TERMS,
    precision: int = DEFAULT_PRECISION,
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF,
    workers: int = 1,
) -> BChiResult:
    """
    B_chi(r) by the accelerated product over the first n_terms primes.

    Args:
        chi: Character modulo d
        r: Rank, at least 1
        n_terms: Number of primes in the partial product
        precision: Working bits for the mpmath parts
        exact_cutoff: Primes up to this bound are multiplied in mpmath
        workers: Threads for the double-precision tail

    Raises:
        ValidityConditionError: If (r, n_terms) violates the validity condition

    Example:
        >>> from indexdens.characters import find_character
        >>> result = b_chi(find_character(5, "principal"), 1, n_terms=100)
        >>> result.rational
        Fraction(19, 20)
    """
    next_prime = check_validity(r, n_terms)
    e_bound = Fraction(1, next_prime ** (r + 2))
    wp = precision + 16

    if is_principal(chi):
        rational = principal_b_chi(chi.modulus, r)
        value = BigComplexValue.from_number(rational, wp)
        return BChiResult(chi, r, n_terms, value, e_bound, False, exact=True, rational=rational)

    constant = artin_constant(r, wp)
    lam = BigComplexValue.from_number(1, wp) * constant
    for s in (r + 1, r + 2, r + 3):
        lam = lam * dirichlet_L(s, chi, wp)
    primes = first_primes(n_terms)
    partial = _euler_product(chi, primes, _AcceleratedFactor(r), wp, exact_cutoff, workers)
    value = lam * partial

    phase = not chi.is_real
    with mp.workprec(wp):
        e = mpf(e_bound.numerator) / e_bound.denominator
        band = (2 * e + e * e) if phase else e
        value = value.inflate(abs(value.value) * band * (1 + mpf(2) ** -40))
    logger.info(f"B_{chi.label}({r}) over {n_terms} primes, radius {mp.nstr(value.radius, 3)}")
    return BChiResult(chi, r, n_terms, value, e_bound, phase)


def b_chi_raw(
    chi: DirichletCharacter, r: int, prime_bound: int, precision: int = 64
) -> BigComplexValue:
    """
    The defining product of B_chi(r) truncated at p <= prime_bound.

    The omitted factors contribute at most t = 6 X^-r / r to the logarithm,
    so the radius includes |value| (e^t - 1). Principal characters are exact.

    Raises:
        PreconditionError: If prime_bound < 2 or r < 1
    """
    if prime_bound < 2:
        raise PreconditionError("prime_bound must be at least 2")
    if r < 1:
        raise PreconditionError(f"rank must be at least 1, got {r}")
    if is_principal(chi):
        rational = Fraction(1)
        for p in prime_divisors(chi.modulus):
            if p <= prime_bound:
                rational *= 1 - Fraction(1, (p - 1) * p**r)
        return BigComplexValue.from_number(rational, precision)
    primes = primes_up_to(prime_bound)
    product = _euler_product(chi, primes, _RawFactor(r), precision, DEFAULT_EXACT_CUTOFF, 1)
    with mp.workprec(precision):
        t = 6 * mpf(prime_bound) ** (-r) / r
        return product.inflate(abs(product.value) * mp.expm1(t))


def b_chi_single_l(
    chi: DirichletCharacter,
    r: int,
    n_terms: int,
    precision: int = DEFAULT_PRECISION,
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF,
) -> BigComplexValue:
    """
    B_chi(r) = A_r L(r+1, chi) prod_p (1 + chi(p)/(p (p^(r+1) - p^r - 1))), truncated.

    The product is cut after n_terms primes; the omitted logarithm is at most
    2.2 p_n^-(r+1) / (r+1).
    """
    if n_terms < 1 or r < 1:
        raise PreconditionError("n_terms and r must be at least 1")
    wp = precision + 16
    lam = dirichlet_L(r + 1, chi, wp) * artin_constant(r, wp)
    primes = first_primes(n_terms)
    partial = _euler_product(chi, primes, _SingleLFactor(r), wp, exact_cutoff, 1)
    value = lam * partial
    with mp.workprec(wp):
        t = mpf(22) / 10 * mpf(int(primes[-1])) ** (-(r + 1)) / (r + 1)
        return value.inflate(abs(value.value) * mp.expm1(t))
