"""
Closed-form densities of primes whose index lies in a residue class.

For w = gcd(a, d), a' = a/w, d' = d/w and a != 0 mod d,

    dens(a, d) = sum_{chi mod d'} d_chi B_chi(r),
    d_chi = conj(chi(a')) / (phi(d') w^r)
            * sum_{g | n0} C(g) sum_{n | n0/g} mu(n) c_chi(gn / gcd(gn, w), w, r),

and dens(0, d) = 1 / [K_{d,d} : K] exactly.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from mpmath import mp, mpf

from indexdens.characters.group import DirichletCharacter, build_character_group, evaluate
from indexdens.constants.bchi import BChiResult, b_chi
from indexdens.constants.euler import c_chi
from indexdens.core.arith import divisors, euler_phi, gcd_infty, mobius
from indexdens.core.errors import ImaginaryResidualError, PreconditionError
from indexdens.core.settings import DEFAULT_EXACT_CUTOFF, DEFAULT_PRECISION, DEFAULT_TERMS
from indexdens.core.types import Positivity
from indexdens.core.values import BigComplexValue, BigRealValue
from indexdens.density.model import GENERIC_R1, DegreeModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensityRequest:
    """
    A residue class a mod d, normalised to 0 <= a < d.

    Attributes:
        a: Residue
        d: Modulus
    """

    a: int
    d: int

    @staticmethod
    def of(a: int, d: int) -> "DensityRequest":
        """
        Raises:
            PreconditionError: If d < 1
        """
        if d < 1:
            raise PreconditionError(f"Modulus must be positive, got {d}")
        return DensityRequest(a % d, d)

    @property
    def w(self) -> int:
        return math.gcd(self.a, self.d)

    @property
    def a_prime(self) -> int:
        return self.a // self.w

    @property
    def d_prime(self) -> int:
        return self.d // self.w


@dataclass(frozen=True)
class CharacterTerm:
    """One summand d_chi B_chi(r) of a density."""

    character: DirichletCharacter
    coefficient: BigComplexValue
    constant: Optional[BChiResult]

    @property
    def contribution(self) -> BigComplexValue:
        if self.constant is None:
            return self.coefficient
        return self.coefficient * self.constant.value


@dataclass(frozen=True)
class DensityReport:
    """
    Result of dens(a, d) for one degree model.

    Attributes:
        request: The residue class
        model: Degree model used
        density: The density with its radius
        terms: Per-character coefficients and constants (empty when exact)
        imaginary_residual: |Im| of the discarded imaginary part
        exact: The rational value for a = 0 mod d
    """

    request: DensityRequest
    model: DegreeModel
    density: BigRealValue
    terms: tuple[CharacterTerm, ...] = ()
    imaginary_residual: mpf = mpf(0)
    exact: Optional[Fraction] = None

    @property
    def coefficients(self) -> dict[str, BigComplexValue]:
        return {term.character.label: term.coefficient for term in self.terms}


def degree(n: int, model: DegreeModel) -> int:
    """
    [K_{n,n} : K] = phi(n) n^r / C(gcd(n, n0)).

    Example:
        >>> degree(6, GENERIC_R1)
        12
    """
    return model.degree(n)


def character_coefficient(
    chi: DirichletCharacter, request: DensityRequest, model: DegreeModel, precision: int
) -> BigComplexValue:
    """d_chi for the class `request` under `model`."""
    r = model.rank
    w = request.w
    wp = precision + 16
    table = model.table
    inner = BigComplexValue.zero(wp)
    for g in divisors(model.n0):
        for n in divisors(model.n0 // g):
            mu = mobius(n)
            if mu == 0:
                continue
            gn = g * n
            factor = c_chi(gn // math.gcd(gn, w), w, r, chi, precision)
            if factor.is_exact_zero:
                continue
            inner = inner + factor * (mu * table[g])
    if inner.is_exact_zero:
        return inner
    scale = Fraction(1, euler_phi(request.d_prime) * w**r)
    return evaluate(chi, request.a_prime).conjugate().to_ball(wp) * inner * scale


def dens(
    a: int,
    d: int,
    model: DegreeModel,
    precision: int = DEFAULT_PRECISION,
    n_terms: int = DEFAULT_TERMS,
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF,
    workers: int = 1,
) -> DensityReport:
    """
    Density of primes whose index is congruent to a mod d.

    Args:
        a: Residue, reduced mod d
        d: Modulus, at least 1
        model: Degree model of (K, G)
        precision: Working bits
        n_terms: Primes in each B_chi product
        exact_cutoff: Primes multiplied in mpmath inside B_chi
        workers: Threads for the B_chi tails

    Raises:
        PreconditionError: If d < 1
        ImaginaryResidualError: If the imaginary part exceeds 2^-(precision/2) plus the radius

    Example:
        >>> report = dens(0, 5, Q_SQRT5_GOLDEN)
        >>> report.exact
        Fraction(1, 10)
    """
    request = DensityRequest.of(a, d)
    wp = precision + 16
    if request.a == 0:
        exact = Fraction(1, degree(request.d, model))
        return DensityReport(
            request, model, BigRealValue.from_number(exact, wp), exact=exact
        )

    _, characters = build_character_group(request.d_prime)
    terms = []
    total = BigComplexValue.zero(wp)
    for chi in characters:
        coefficient = character_coefficient(chi, request, model, precision)
        if coefficient.is_exact_zero:
            terms.append(CharacterTerm(chi, coefficient, None))
            continue
        constant = b_chi(
            chi,
            model.rank,
            n_terms=n_terms,
            precision=precision,
            exact_cutoff=exact_cutoff,
            workers=workers,
        )
        term = CharacterTerm(chi, coefficient, constant)
        terms.append(term)
        total = total + term.contribution

    with mp.workprec(wp):
        residual = abs(total.value.imag)
        tolerance = mpf(2) ** (-(precision // 2))
        if residual > tolerance + total.radius:
            raise ImaginaryResidualError(
                f"dens({request.a}, {request.d}) has imaginary part {mp.nstr(residual, 5)} "
                f"above tolerance {mp.nstr(tolerance, 3)}"
            )
    density = BigRealValue(mpf(total.value.real), total.radius, total.precision)
    logger.debug(f"dens({request.a}, {request.d}) under {model.label} from {len(terms)} characters")
    return DensityReport(request, model, density, tuple(terms), residual)


def density_table(
    d: int,
    model: DegreeModel,
    precision: int = DEFAULT_PRECISION,
    n_terms: int = DEFAULT_TERMS,
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF,
    workers: int = 1,
) -> list[DensityReport]:
    """dens(a, d) for every a in 0..d-1."""
    return [
        dens(a, d, model, precision, n_terms=n_terms, exact_cutoff=exact_cutoff, workers=workers)
        for a in range(d)
    ]


def rho(
    a: int,
    d: int,
    precision: int = DEFAULT_PRECISION,
    n_terms: int = DEFAULT_TERMS,
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF,
    workers: int = 1,
) -> BigRealValue:
    """
    Density of primes p whose index of <g> mod p is congruent to a mod d,
    for a generic rank-1 group.

    Example:
        >>> rho(0, 6).contains(Fraction(1, 12))
        True
    """
    report = dens(
        a, d, GENERIC_R1, precision, n_terms=n_terms, exact_cutoff=exact_cutoff, workers=workers
    )
    return report.density


def positivity(a: int, d: int, model: DegreeModel) -> Positivity:
    """
    Sufficient criteria for dens(a, d) > 0.

    POSITIVE when a = 0 mod d or gcd(d, n0) = 1; otherwise d is reduced to
    its n0-part d0 = gcd_infty(d, n0) and the class a mod d0 is retried.
    UNKNOWN when neither criterion applies.

    Raises:
        PreconditionError: If d < 1
    """
    request = DensityRequest.of(a, d)
    if request.a == 0 or math.gcd(request.d, model.n0) == 1:
        return Positivity.POSITIVE
    reduced = gcd_infty(request.d, model.n0)
    if request.a % reduced == 0:
        return Positivity.POSITIVE
    return Positivity.UNKNOWN
