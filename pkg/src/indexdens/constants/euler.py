"""
Finite Euler factors relating restricted character series to B_chi(r).

For N, w >= 1,

    C_chi(N, w, r) = sum_{N | v} h_chi(v) / (phi(v w) v^r) = c_chi(N, w, r) B_chi(r)

with c_chi a finite product over the primes dividing N w.
"""

from fractions import Fraction
from typing import Optional

from indexdens.characters.group import DirichletCharacter, evaluate, h_chi
from indexdens.constants.bchi import b_chi
from indexdens.core.arith import factorize, squarefree_kernel
from indexdens.core.errors import PreconditionError
from indexdens.core.settings import DEFAULT_EXACT_CUTOFF, DEFAULT_PRECISION, DEFAULT_TERMS
from indexdens.core.values import BigComplexValue, BigRealValue


def _local_denominator(p: int, r: int, chi: DirichletCharacter, wp: int) -> BigComplexValue:
    """p^(r+2) - p^(r+1) - p + chi(p)."""
    integer_part = p ** (r + 2) - p ** (r + 1) - p
    return evaluate(chi, p).to_ball(wp) + BigRealValue.from_number(integer_part, wp)


def c_chi(
    N: int, w: int, r: int, chi: DirichletCharacter, precision: int = DEFAULT_PRECISION
) -> BigComplexValue:
    """
    c_chi(N, w, r) = h(N) kappa(Nw) / (N^(r+1) w)
                     * prod_{p | N} p^(r+1) / D_p
                     * prod_{p | w, p not | N} (p^(r+1) - 1) / D_p,

    where D_p = p^(r+2) - p^(r+1) - p + chi(p). Exactly zero when h_chi(N) = 0.

    Raises:
        PreconditionError: If N, w or r is below 1
    """
    if N < 1 or w < 1 or r < 1:
        raise PreconditionError(f"c_chi needs N, w, r >= 1, got {(N, w, r)}")
    h = h_chi(chi, N)
    wp = precision + 16
    if h.is_syntactically_zero:
        return BigComplexValue.zero(wp)
    value = h.to_ball(wp) * Fraction(squarefree_kernel(N * w), N ** (r + 1) * w)
    n_primes = factorize(N)
    for p in n_primes:
        value = value * (p ** (r + 1)) / _local_denominator(p, r, chi, wp)
    for p in factorize(w):
        if p not in n_primes:
            value = value * (p ** (r + 1) - 1) / _local_denominator(p, r, chi, wp)
    return value


def cap_c_chi(
    N: int,
    w: int,
    r: int,
    chi: DirichletCharacter,
    precision: int = DEFAULT_PRECISION,
    n_terms: int = DEFAULT_TERMS,
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF,
    workers: int = 1,
    cofactor: Optional[BigComplexValue] = None,
) -> BigComplexValue:
    """
    C_chi(N, w, r) = c_chi(N, w, r) * B_chi(r).

    `cofactor` may carry a precomputed c_chi value.
    """
    factor = cofactor if cofactor is not None else c_chi(N, w, r, chi, precision)
    if factor.is_exact_zero:
        return factor
    constant = b_chi(
        chi, r, n_terms=n_terms, precision=precision, exact_cutoff=exact_cutoff, workers=workers
    )
    return factor * constant.value
