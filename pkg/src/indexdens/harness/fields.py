"""
Real quadratic fields, their elements and finitely generated groups.

Elements of Q(sqrt D) are stored as (A + B w) / m with integers A, B, m,
m > 0 and gcd(A, B, m) = 1, where w is the standard integral basis element:
w = (1 + sqrt D)/2 with w^2 = w + (D-1)/4 when D = 1 mod 4, and w = sqrt D
with w^2 = D otherwise. For Q itself B is always 0.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from sympy import Rational, expand, sqrt, sympify
from sympy.core.sympify import SympifyError

from indexdens.core.arith import factorize, lcm
from indexdens.core.errors import GeneratorParseError, PreconditionError

_SQRT_PATTERNS = (
    (re.compile(r"sqrt\s*\(\s*(\d+)\s*\)"), r"sqrt(\1)"),
    (re.compile(r"sqrt\s*(\d+)"), r"sqrt(\1)"),
    (re.compile(r"√\s*\(?\s*(\d+)\s*\)?"), r"sqrt(\1)"),
)


@dataclass(frozen=True)
class QuadraticFieldSpec:
    """
    Q(sqrt D) for squarefree D > 1, or Q itself when D is None.

    Example:
        >>> QuadraticFieldSpec.of(5).discriminant
        5
    """

    D: Optional[int] = None

    def __post_init__(self) -> None:
        if self.D is None:
            return
        if self.D < 2:
            raise PreconditionError(f"D must be a squarefree integer > 1, got {self.D}")
        if any(e > 1 for e in factorize(self.D).values()):
            raise PreconditionError(f"D = {self.D} is not squarefree")

    @staticmethod
    def rational() -> "QuadraticFieldSpec":
        return QuadraticFieldSpec(None)

    @staticmethod
    def of(D: int) -> "QuadraticFieldSpec":
        return QuadraticFieldSpec(D)

    @staticmethod
    def parse(text: str) -> "QuadraticFieldSpec":
        """'Q' for the rationals, otherwise the integer D."""
        cleaned = text.strip()
        if cleaned.upper() in ("Q", "QQ", "1"):
            return QuadraticFieldSpec.rational()
        try:
            return QuadraticFieldSpec.of(int(cleaned))
        except ValueError as exc:
            raise PreconditionError(f"Cannot read field {text!r}; use Q or a squarefree D") from exc

    @property
    def is_rational(self) -> bool:
        return self.D is None

    @property
    def discriminant(self) -> int:
        if self.D is None:
            return 1
        return self.D if self.D % 4 == 1 else 4 * self.D

    @property
    def omega_relation(self) -> tuple[int, int]:
        """(c1, c0) with w^2 = c1 w + c0."""
        if self.D is None:
            return 0, 0
        if self.D % 4 == 1:
            return 1, (self.D - 1) // 4
        return 0, self.D

    def __str__(self) -> str:
        return "Q" if self.D is None else f"Q(sqrt{self.D})"


@dataclass(frozen=True)
class FieldElement:
    """
    The element (A + B w) / m of a field.

    Attributes:
        field: Ambient field
        A, B: Integer coordinates in the basis (1, w)
        m: Positive common denominator
    """

    field: QuadraticFieldSpec
    A: int
    B: int
    m: int = 1

    def __post_init__(self) -> None:
        if self.m < 1:
            raise PreconditionError("Denominator must be positive")
        if self.field.is_rational and self.B != 0:
            raise PreconditionError("Elements of Q have no w-coordinate")
        g = math.gcd(math.gcd(self.A, self.B), self.m)
        if g > 1:
            object.__setattr__(self, "A", self.A // g)
            object.__setattr__(self, "B", self.B // g)
            object.__setattr__(self, "m", self.m // g)

    @staticmethod
    def from_rational_coordinates(
        field: QuadraticFieldSpec, x: Fraction, y: Fraction = Fraction(0)
    ) -> "FieldElement":
        """The element x + y sqrt D."""
        x, y = Fraction(x), Fraction(y)
        if field.D is None:
            if y:
                raise PreconditionError("Q has no sqrt D coordinate")
            return FieldElement(field, x.numerator, 0, x.denominator)
        if field.D % 4 == 1:
            # sqrt D = 2w - 1
            a, b = x - y, 2 * y
        else:
            a, b = x, y
        m = lcm(a.denominator, b.denominator)
        return FieldElement(field, int(a * m), int(b * m), m)

    @property
    def numerator_norm(self) -> int:
        """N(A + B w) = A^2 + c1 A B - c0 B^2."""
        c1, c0 = self.field.omega_relation
        return self.A * self.A + c1 * self.A * self.B - c0 * self.B * self.B

    @property
    def norm(self) -> Fraction:
        return Fraction(self.numerator_norm, self.m * self.m)

    @property
    def is_zero(self) -> bool:
        return self.A == 0 and self.B == 0

    @property
    def coordinates(self) -> tuple[Fraction, Fraction]:
        """(x, y) with the element equal to x + y sqrt D."""
        D = self.field.D
        if D is None or D % 4 != 1:
            return Fraction(self.A, self.m), Fraction(self.B, self.m)
        return Fraction(2 * self.A + self.B, 2 * self.m), Fraction(self.B, 2 * self.m)

    def __str__(self) -> str:
        x, y = self.coordinates
        if not y:
            return str(x)
        return f"{x} + {y}*sqrt{self.field.D}" if x else f"{y}*sqrt{self.field.D}"


def _normalise_text(text: str) -> str:
    cleaned = text.strip()
    for pattern, replacement in _SQRT_PATTERNS:
        cleaned = pattern.sub(replacement, cleaned)
    return cleaned


def parse_element(text: str, field: QuadraticFieldSpec) -> FieldElement:
    """
    Parse an expression such as "(1+sqrt5)/2", "-(5+sqrt(5))/2" or "4".

    Raises:
        GeneratorParseError: If the text is not a rational combination of 1 and sqrt D
    """
    try:
        expr = expand(sympify(_normalise_text(text), rational=True))
    except (SympifyError, SyntaxError, TypeError) as exc:
        raise GeneratorParseError(f"Cannot parse generator {text!r}: {exc}") from exc
    if field.D is None:
        if not expr.is_Rational:
            raise GeneratorParseError(f"{text!r} is not a rational number")
        return FieldElement.from_rational_coordinates(field, Fraction(int(expr.p), int(expr.q)))
    root = sqrt(field.D)
    y = expand(expr).coeff(root)
    x = expand(expr - y * root)
    if not (isinstance(x, Rational) and isinstance(y, Rational)):
        raise GeneratorParseError(f"{text!r} is not of the form x + y*sqrt({field.D})")
    return FieldElement.from_rational_coordinates(
        field, Fraction(int(x.p), int(x.q)), Fraction(int(y.p), int(y.q))
    )


@dataclass(frozen=True)
class GroupSpec:
    """
    The group G generated by finitely many field elements.

    Generators are assumed multiplicatively independent; this is not checked.
    Zero and the roots of unity +-1 are rejected.
    """

    field: QuadraticFieldSpec
    generators: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise PreconditionError("A group needs at least one generator")
        for g in self.generators:
            if g.field != self.field:
                raise PreconditionError(f"Generator {g} lies in {g.field}, not {self.field}")
            if g.is_zero:
                raise GeneratorParseError("Generators must be non-zero")
            if g.B == 0 and g.m == 1 and abs(g.A) == 1:
                raise GeneratorParseError(f"Generator {g} is a root of unity")

    @staticmethod
    def parse(field: QuadraticFieldSpec, texts: Sequence[Union[str, FieldElement]]) -> "GroupSpec":
        elements = tuple(
            t if isinstance(t, FieldElement) else parse_element(t, field) for t in texts
        )
        return GroupSpec(field, elements)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return f"<{', '.join(str(g) for g in self.generators)}> in {self.field}"
