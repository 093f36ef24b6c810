"""
Exact roots of unity and integer combinations of them.

Character values are kept exact until a caller asks for a numeric
rendering at a stated precision.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath
from mpmath import mp, mpc, mpf
from sympy import Poly, cyclotomic_poly, symbols

from indexdens.core.values import BigComplexValue

_X = symbols("x")

_ROOT_PATTERN = re.compile(r"^e\(\s*(-?\d+)\s*/\s*(\d+)\s*\)$")


@dataclass(frozen=True)
class ExactRootOfUnity:
    """
    The value e^(2 pi i k / m), or exact zero.

    Attributes:
        numerator: k, normalised to 0 <= k < m with gcd(k, m) = 1
        denominator: m
        is_zero: True for the zero value taken by characters off the units
    """

    numerator: int = 0
    denominator: int = 1
    is_zero: bool = False

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        if self.is_zero:
            object.__setattr__(self, "numerator", 0)
            object.__setattr__(self, "denominator", 1)
            return
        k = self.numerator % self.denominator
        g = math.gcd(k, self.denominator)
        object.__setattr__(self, "numerator", k // g)
        object.__setattr__(self, "denominator", self.denominator // g)

    @staticmethod
    def one() -> "ExactRootOfUnity":
        return ExactRootOfUnity(0, 1)

    @staticmethod
    def zero() -> "ExactRootOfUnity":
        return ExactRootOfUnity(is_zero=True)

    @staticmethod
    def from_angle(angle: Fraction) -> "ExactRootOfUnity":
        """The root e^(2 pi i angle)."""
        return ExactRootOfUnity(angle.numerator, angle.denominator)

    @staticmethod
    def parse(text: str) -> "ExactRootOfUnity":
        """
        Parse "1", "-1", "i", "-i", "0" or "e(k/m)".

        Raises:
            ValueError: If the text names no root of unity
        """
        cleaned = text.strip().replace(" ", "").lower()
        named = {
            "1": ExactRootOfUnity(0, 1),
            "-1": ExactRootOfUnity(1, 2),
            "i": ExactRootOfUnity(1, 4),
            "-i": ExactRootOfUnity(3, 4),
            "0": ExactRootOfUnity.zero(),
        }
        if cleaned in named:
            return named[cleaned]
        match = _ROOT_PATTERN.match(cleaned)
        if match is None:
            raise ValueError(f"Not a root of unity: {text!r}")
        return ExactRootOfUnity(int(match.group(1)), int(match.group(2)))

    @property
    def angle(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def order(self) -> int:
        """Multiplicative order; zero has none."""
        if self.is_zero:
            raise ValueError("zero has no multiplicative order")
        return self.denominator

    @property
    def is_one(self) -> bool:
        return not self.is_zero and self.numerator == 0

    def __mul__(self, other: "ExactRootOfUnity") -> "ExactRootOfUnity":
        if self.is_zero or other.is_zero:
            return ExactRootOfUnity.zero()
        return ExactRootOfUnity.from_angle(self.angle + other.angle)

    def __pow__(self, exponent: int) -> "ExactRootOfUnity":
        if self.is_zero:
            if exponent == 0:
                return ExactRootOfUnity.one()
            if exponent < 0:
                raise ZeroDivisionError("negative power of zero")
            return self
        return ExactRootOfUnity.from_angle(self.angle * exponent)

    def conjugate(self) -> "ExactRootOfUnity":
        if self.is_zero:
            return self
        return ExactRootOfUnity(-self.numerator, self.denominator)

    def _symmetric_angle(self) -> Fraction:
        # representative in (-1/2, 1/2] so conjugates render as exact conjugates
        angle = self.angle
        return angle - 1 if angle > Fraction(1, 2) else angle

    def to_complex(self, precision: int) -> mpc:
        """Numeric value rounded to `precision` bits."""
        if self.is_zero:
            return mpc(0)
        with mp.workprec(precision):
            twice = 2 * self._symmetric_angle()
            x = mpf(twice.numerator) / twice.denominator
            return mpc(mpmath.cospi(x), mpmath.sinpi(x))

    def to_ball(self, precision: int) -> BigComplexValue:
        if self.is_zero or self.numerator == 0:
            return BigComplexValue.from_number(0 if self.is_zero else 1, precision)
        exact = self.denominator in (2, 4)
        with mp.workprec(precision):
            radius = mpf(0) if exact else mpf(2) ** (3 - precision)
        return BigComplexValue(self.to_complex(precision), radius, precision)

    def __complex__(self) -> complex:
        return complex(self.to_complex(64))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        names = {(0, 1): "1", (1, 2): "-1", (1, 4): "i", (3, 4): "-i"}
        return names.get((self.numerator, self.denominator),
                         f"e({self.numerator}/{self.denominator})")


@lru_cache(maxsize=512)
def _cyclotomic(m: int) -> Poly:
    return Poly(cyclotomic_poly(m, _X), _X, domain="ZZ")


Coefficient = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class CyclotomicValue:
    """
    Exact element sum(c_j * e(theta_j)) of a cyclotomic field.

    Terms are stored syntactically (angle -> integer coefficient, zero
    coefficients dropped); is_zero() and equals() decide exact equality by
    reducing modulo the cyclotomic polynomial.
    """

    terms: tuple[tuple[Fraction, int], ...] = ()

    @staticmethod
    def from_mapping(mapping: dict[Fraction, int]) -> "CyclotomicValue":
        cleaned = {angle % 1: 0 for angle in mapping}
        for angle, c in mapping.items():
            cleaned[angle % 1] += c
        return CyclotomicValue(tuple(sorted((a, c) for a, c in cleaned.items() if c != 0)))

    @staticmethod
    def zero() -> "CyclotomicValue":
        return CyclotomicValue(())

    @staticmethod
    def from_int(n: int) -> "CyclotomicValue":
        return CyclotomicValue.from_mapping({Fraction(0): n})

    @staticmethod
    def one() -> "CyclotomicValue":
        return CyclotomicValue.from_int(1)

    @staticmethod
    def from_root(root: ExactRootOfUnity) -> "CyclotomicValue":
        if root.is_zero:
            return CyclotomicValue.zero()
        return CyclotomicValue.from_mapping({root.angle: 1})

    @property
    def is_syntactically_zero(self) -> bool:
        return not self.terms

    @property
    def conductor(self) -> int:
        """Smallest m with every term an m-th root of unity."""
        m = 1
        for angle, _ in self.terms:
            m = m * angle.denominator // math.gcd(m, angle.denominator)
        return m

    def _as_mapping(self) -> dict[Fraction, int]:
        return dict(self.terms)

    def __add__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        merged = self._as_mapping()
        for angle, c in other.terms:
            merged[angle] = merged.get(angle, 0) + c
        return CyclotomicValue.from_mapping(merged)

    def __neg__(self) -> "CyclotomicValue":
        return CyclotomicValue(tuple((a, -c) for a, c in self.terms))

    def __sub__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        return self + (-other)

    def __mul__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        product: dict[Fraction, int] = {}
        for a1, c1 in self.terms:
            for a2, c2 in other.terms:
                angle = (a1 + a2) % 1
                product[angle] = product.get(angle, 0) + c1 * c2
        return CyclotomicValue.from_mapping(product)

    def conjugate(self) -> "CyclotomicValue":
        return CyclotomicValue.from_mapping({-a: c for a, c in self.terms})

    def is_zero(self) -> bool:
        """Exact zero test in Q(zeta_m), m the conductor."""
        if not self.terms:
            return True
        m = self.conductor
        coefficients = [0] * m
        for angle, c in self.terms:
            coefficients[angle.numerator * (m // angle.denominator)] += c
        poly = Poly(list(reversed(coefficients)), _X, domain="ZZ")
        return bool(poly.rem(_cyclotomic(m)).is_zero)

    def equals(self, other: "CyclotomicValue") -> bool:
        return (self - other).is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CyclotomicValue.from_int(other)
        if isinstance(other, ExactRootOfUnity):
            other = CyclotomicValue.from_root(other)
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def to_complex(self, precision: int) -> mpc:
        with mp.workprec(precision):
            total = mpc(0)
            for angle, c in self.terms:
                total += c * ExactRootOfUnity.from_angle(angle).to_complex(precision)
            return total

    def to_ball(self, precision: int) -> BigComplexValue:
        """Numeric value with a radius covering every rendering error."""
        with mp.workprec(precision):
            weight = sum(abs(c) for _, c in self.terms)
            value = self.to_complex(precision)
            radius = mpf(weight + 1) * mpf(2) ** (4 - precision)
        if self.is_syntactically_zero:
            return BigComplexValue.zero(precision)
        return BigComplexValue(value, radius, precision)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for angle, c in self.terms:
            root = str(ExactRootOfUnity.from_angle(angle))
            parts.append(f"{c}" if root == "1" else f"{c}*{root}")
        return " + ".join(parts)
