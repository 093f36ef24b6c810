"""
Arbitrary-precision values with attached error radii.

A value is an mpmath midpoint at a stated binary precision together with a
radius bounding its distance to the true quantity. Arithmetic propagates
radii outward and adds a rounding allowance for every operation carried out
at the working precision.
"""

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any, Union

import mpmath
from mpmath import mp, mpc, mpf

Number = Union[int, Fraction, float, complex, mpf, mpc]

# radii are nudged upward by this factor after every operation
_RADIUS_NUDGE = 1 + 2.0**-40


def rounding_allowance(magnitude: Any, precision: int) -> mpf:
    """Bound on the rounding error of one operation producing `magnitude`."""
    return mpf(abs(magnitude)) * mpf(2) ** (2 - precision)


def fraction_to_mpf(q: Fraction) -> mpf:
    """Round a rational to the current working precision."""
    return mpf(q.numerator) / q.denominator


def _nudge(radius: Any) -> mpf:
    return mpf(radius) * _RADIUS_NUDGE


def _as_ball(x: Any, precision: int) -> Any:
    if isinstance(x, (BigRealValue, BigComplexValue)):
        return x
    if isinstance(x, (int, Fraction, float, mpf)):
        return BigRealValue.from_number(x, precision)
    return BigComplexValue.from_number(x, precision)


class _BallArithmetic:
    """Shared radius propagation for real and complex balls."""

    value: Any
    radius: mpf
    precision: int

    def _make(self, rhs: Any, value: Any, radius: Any, precision: int) -> Any:
        if isinstance(self, BigRealValue) and isinstance(rhs, BigRealValue):
            return BigRealValue(mpf(value.real) if isinstance(value, mpc) else value,
                                _nudge(radius), precision)
        return BigComplexValue(mpc(value), _nudge(radius), precision)

    def __add__(self, other: Any) -> Any:
        rhs = _as_ball(other, self.precision)
        prec = max(self.precision, rhs.precision)
        with mp.workprec(prec):
            value = self.value + rhs.value
            radius = self.radius + rhs.radius + rounding_allowance(value, prec)
        return self._make(rhs, value, radius, prec)

    __radd__ = __add__

    def __neg__(self) -> Any:
        return type(self)(-self.value, self.radius, self.precision)

    def __sub__(self, other: Any) -> Any:
        return self + (-_as_ball(other, self.precision))

    def __rsub__(self, other: Any) -> Any:
        return -(self - other)

    def __mul__(self, other: Any) -> Any:
        rhs = _as_ball(other, self.precision)
        prec = max(self.precision, rhs.precision)
        with mp.workprec(prec):
            value = self.value * rhs.value
            radius = (
                abs(self.value) * rhs.radius
                + abs(rhs.value) * self.radius
                + self.radius * rhs.radius
                + rounding_allowance(value, prec)
            )
        return self._make(rhs, value, radius, prec)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Any:
        rhs = _as_ball(other, self.precision)
        prec = max(self.precision, rhs.precision)
        with mp.workprec(prec):
            denominator = abs(rhs.value)
            if denominator <= rhs.radius:
                raise ZeroDivisionError("divisor ball contains zero")
            value = self.value / rhs.value
            radius = (abs(self.value) * rhs.radius + denominator * self.radius) / (
                denominator * (denominator - rhs.radius)
            ) + rounding_allowance(value, prec)
        return self._make(rhs, value, radius, prec)

    def __abs__(self) -> "BigRealValue":
        with mp.workprec(self.precision):
            value = abs(self.value)
            return BigRealValue(value, _nudge(self.radius + rounding_allowance(value, self.precision)),
                                self.precision)

    @property
    def is_exact_zero(self) -> bool:
        return self.value == 0 and self.radius == 0

    def overlaps(self, other: Any) -> bool:
        """True when the two balls intersect."""
        rhs = _as_ball(other, self.precision)
        with mp.workprec(max(self.precision, rhs.precision)):
            return bool(abs(self.value - rhs.value) <= self.radius + rhs.radius)

    def contains(self, x: Number) -> bool:
        """True when `x` lies inside the ball."""
        with mp.workprec(self.precision):
            return bool(abs(self.value - _coerce(x)) <= self.radius)

    def distance(self, x: Number) -> mpf:
        """Distance from the midpoint to `x`."""
        with mp.workprec(self.precision):
            return abs(self.value - _coerce(x))


def _coerce(x: Number) -> Any:
    if isinstance(x, Fraction):
        return fraction_to_mpf(x)
    if isinstance(x, complex):
        return mpc(x)
    if isinstance(x, (BigRealValue, BigComplexValue)):
        return x.value
    return mpf(x) if not isinstance(x, mpc) else x


@dataclass(frozen=True)
class BigRealValue(_BallArithmetic):
    """
    Real midpoint and error radius.

    Attributes:
        value: Midpoint
        radius: Non-negative bound on |true value - midpoint|
        precision: Binary precision of the midpoint
    """

    value: mpf
    radius: mpf
    precision: int

    @staticmethod
    def from_number(x: Number, precision: int) -> "BigRealValue":
        """Round a real number to `precision` bits, with matching radius."""
        with mp.workprec(precision):
            if isinstance(x, int):
                value = mpf(x)
                exact = value == x
            elif isinstance(x, Fraction):
                value = fraction_to_mpf(x)
                dyadic = x.denominator & (x.denominator - 1) == 0
                exact = dyadic and abs(x.numerator).bit_length() <= precision
            else:
                value = mpf(x)
                exact = True
            radius = mpf(0) if exact else rounding_allowance(value, precision)
        return BigRealValue(value, radius, precision)

    @staticmethod
    def zero(precision: int) -> "BigRealValue":
        return BigRealValue(mpf(0), mpf(0), precision)

    def exp(self) -> "BigRealValue":
        """exp of the ball; the radius grows by the factor e^radius - 1."""
        with mp.workprec(self.precision):
            value = mpmath.exp(self.value)
            radius = value * mpmath.expm1(self.radius) + rounding_allowance(value, self.precision)
        return BigRealValue(value, _nudge(radius), self.precision)

    def log(self) -> "BigRealValue":
        """Natural logarithm of a ball strictly inside (0, inf)."""
        with mp.workprec(self.precision):
            if self.value <= self.radius:
                raise ValueError("log of a ball that reaches zero")
            value = mpmath.log(self.value)
            radius = self.radius / (self.value - self.radius) + rounding_allowance(
                value, self.precision
            )
        return BigRealValue(value, _nudge(radius), self.precision)

    def to_complex(self) -> "BigComplexValue":
        return BigComplexValue(mpc(self.value), self.radius, self.precision)

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class BigComplexValue(_BallArithmetic):
    """
    Complex midpoint and error radius (a disc in the complex plane).

    Attributes:
        value: Midpoint
        radius: Non-negative bound on |true value - midpoint|
        precision: Binary precision of the midpoint
    """

    value: mpc
    radius: mpf
    precision: int

    @staticmethod
    def from_number(x: Number, precision: int) -> "BigComplexValue":
        """Round a number to `precision` bits, with matching radius."""
        if isinstance(x, (int, Fraction, float, mpf)):
            real = BigRealValue.from_number(x, precision)
            return BigComplexValue(mpc(real.value), real.radius, precision)
        with mp.workprec(precision):
            value = mpc(x)
        return BigComplexValue(value, mpf(0), precision)

    @staticmethod
    def zero(precision: int) -> "BigComplexValue":
        return BigComplexValue(mpc(0), mpf(0), precision)

    @property
    def real(self) -> BigRealValue:
        return BigRealValue(mpf(self.value.real), self.radius, self.precision)

    @property
    def imag(self) -> BigRealValue:
        return BigRealValue(mpf(self.value.imag), self.radius, self.precision)

    def conjugate(self) -> "BigComplexValue":
        return BigComplexValue(mpmath.conj(self.value), self.radius, self.precision)

    def exp(self) -> "BigComplexValue":
        with mp.workprec(self.precision):
            value = mpmath.exp(self.value)
            radius = abs(value) * mpmath.expm1(self.radius) + rounding_allowance(
                value, self.precision
            )
        return BigComplexValue(value, _nudge(radius), self.precision)

    def inflate(self, extra: Any) -> "BigComplexValue":
        """Widen the radius by `extra`."""
        return BigComplexValue(self.value, _nudge(self.radius + mpf(extra)), self.precision)

    def __complex__(self) -> complex:
        return complex(self.value)


def format_fixed(x: mpf, places: int) -> str:
    """Round a real midpoint to `places` digits after the point, as a decimal string."""
    text = mpmath.nstr(x, places + 25, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    quantum = Decimal(1).scaleb(-places) if places > 0 else Decimal(1)
    with localcontext() as ctx:
        ctx.prec = places + 60
        rounded = Decimal(text).quantize(quantum, rounding=ROUND_HALF_EVEN)
    if rounded.is_zero():
        rounded = abs(rounded)
    return str(rounded)


def guaranteed_places(radius: mpf, requested: int) -> int:
    """Largest k <= requested with radius < 10^-k / 2."""
    places = requested
    while places > 0 and radius >= mpf(10) ** (-places) / 2:
        places -= 1
    return places
