"""Tests for core types, values, settings and arithmetic."""

from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpc, mpf

from indexdens.core.arith import (
    divisors,
    euler_phi,
    factor_with_table,
    factorize,
    first_primes,
    gcd_infty,
    lcm,
    merge_factorizations,
    mobius,
    nth_prime,
    p_adic_valuation,
    primes_up_to,
    smallest_factor_table,
    squarefree_kernel,
)
from indexdens.core.errors import (
    FactorizationError,
    ImaginaryResidualError,
    InconsistentModelError,
    IndexDensError,
    PreconditionError,
    ValidityConditionError,
)
from indexdens.core.settings import ComputeSettings, precision_for_digits
from indexdens.core.types import ExclusionConvention, OutputFormat, Positivity, PrimeBehaviour
from indexdens.core.values import (
    BigComplexValue,
    BigRealValue,
    format_fixed,
    guaranteed_places,
)
from indexdens.validation.report import ValidationReport


class TestTypes:
    """Tests for the shared enums."""

    def test_enum_values(self):
        """Test that enum values are the strings used on the command line."""
        assert Positivity.POSITIVE.value == "positive"
        assert PrimeBehaviour.INERT.value == "inert"
        assert ExclusionConvention.COUNT_IN_TOTAL.value == "count-in-total"
        assert OutputFormat.RECORDS.value == "records"

    def test_enum_string(self):
        """Test string conversion."""
        assert str(Positivity.UNKNOWN) == "unknown"
        assert str(OutputFormat.CSV) == "csv"

    def test_enum_from_value(self):
        """Test lookup by value."""
        assert ExclusionConvention("exclude") is ExclusionConvention.EXCLUDE


class TestErrors:
    """Tests for the exception hierarchy."""

    def test_input_errors_are_value_errors(self):
        """Test that user-input errors can be caught as ValueError."""
        assert issubclass(PreconditionError, ValueError)
        assert issubclass(ValidityConditionError, PreconditionError)
        assert issubclass(InconsistentModelError, ValueError)

    def test_arithmetic_errors(self):
        """Test that numerical failures derive from ArithmeticError."""
        assert issubclass(ImaginaryResidualError, ArithmeticError)
        assert issubclass(FactorizationError, IndexDensError)

    def test_inconsistent_model_carries_report(self):
        """Test that the validation report travels with the error."""
        report = ValidationReport()
        report.add_error("n0", "bad")
        error = InconsistentModelError("broken", report)

        assert error.report is report
        assert "broken" in str(error)


class TestComputeSettings:
    """Tests for ComputeSettings."""

    def test_defaults(self):
        """Test the default values."""
        settings = ComputeSettings.default()

        assert settings.digits == 20
        assert settings.n_terms == 10**6
        assert settings.exact_cutoff == 10**4
        assert settings.workers == 1
        assert settings.count_ceiling == 10**8
        assert settings.histogram_cap == 100
        assert settings.convention == ExclusionConvention.EXCLUDE
        assert settings.precision == 192

    def test_precision_grows_with_digits(self):
        """Test that large digit requests raise the working precision."""
        assert precision_for_digits(20) == 192
        assert precision_for_digits(100) == 397

    def test_overrides_skip_none(self):
        """Test that None overrides keep the current value."""
        settings = ComputeSettings.default().with_overrides(digits=None, workers=4)

        assert settings.digits == 20
        assert settings.workers == 4

    def test_unknown_override_raises(self):
        """Test that misspelled settings are rejected."""
        with pytest.raises(ValueError, match="Unknown settings"):
            ComputeSettings.default().with_overrides(threads=4)

    def test_invalid_values_raise(self):
        """Test eager validation."""
        with pytest.raises(ValueError):
            ComputeSettings(workers=0)
        with pytest.raises(ValueError):
            ComputeSettings(digits=0)


class TestBigRealValue:
    """Tests for real balls."""

    def test_sum_contains_exact_result(self):
        """Test that radii cover the rounding of 1/3 + 2/3."""
        a = BigRealValue.from_number(Fraction(1, 3), 128)
        b = BigRealValue.from_number(Fraction(2, 3), 128)

        assert (a + b).contains(1)

    def test_product_and_quotient(self):
        """Test multiplication and division radii."""
        a = BigRealValue.from_number(Fraction(1, 3), 128)
        b = BigRealValue.from_number(Fraction(2, 3), 128)

        assert (a * b).contains(Fraction(2, 9))
        assert (a / b).contains(Fraction(1, 2))

    def test_exact_inputs_have_zero_radius(self):
        """Test that integers and dyadic rationals are exact."""
        assert BigRealValue.from_number(7, 64).radius == 0
        assert BigRealValue.from_number(Fraction(3, 8), 64).radius == 0
        assert BigRealValue.from_number(Fraction(1, 3), 64).radius > 0

    def test_division_by_ball_containing_zero(self):
        """Test that dividing by a ball around zero raises."""
        one = BigRealValue.from_number(1, 64)
        fuzzy_zero = BigRealValue(mpf(0), mpf("1e-3"), 64)

        with pytest.raises(ZeroDivisionError):
            one / fuzzy_zero

    def test_exp_and_log(self):
        """Test exp(1) = e and log(e) = 1."""
        e = BigRealValue.from_number(1, 128).exp()

        with mp.workprec(128):
            assert e.distance(mpmath.e) < mpf("1e-35")
        assert e.log().distance(1) < mpf("1e-35")

    def test_log_of_ball_reaching_zero(self):
        """Test that log refuses a ball touching zero."""
        with pytest.raises(ValueError):
            BigRealValue(mpf("0.1"), mpf("0.2"), 64).log()

    def test_overlaps(self):
        """Test ball intersection."""
        a = BigRealValue(mpf(1), mpf("0.1"), 64)
        b = BigRealValue(mpf("1.15"), mpf("0.1"), 64)
        c = BigRealValue(mpf(2), mpf("0.1"), 64)

        assert a.overlaps(b)
        assert not a.overlaps(c)


class TestBigComplexValue:
    """Tests for complex balls."""

    def test_conjugate_and_parts(self):
        """Test conjugation and the real/imag projections."""
        z = BigComplexValue.from_number(complex(1, 2), 64)

        assert z.conjugate().value == mpc(1, -2)
        assert float(z.real) == 1.0
        assert float(z.imag) == 2.0

    def test_mixed_arithmetic_is_complex(self):
        """Test that real times complex gives a complex ball."""
        z = BigComplexValue.from_number(complex(0, 1), 64)
        x = BigRealValue.from_number(2, 64)

        product = x * z
        assert isinstance(product, BigComplexValue)
        assert product.contains(complex(0, 2))

    def test_zero(self):
        """Test the exact zero."""
        assert BigComplexValue.zero(64).is_exact_zero
        assert not BigComplexValue.from_number(1, 64).is_exact_zero

    def test_inflate(self):
        """Test that inflate widens the radius."""
        z = BigComplexValue.zero(64).inflate(mpf("1e-5"))

        assert z.radius >= mpf("1e-5")


class TestDecimalRendering:
    """Tests for decimal rendering helpers."""

    def test_format_fixed_rounds_half_even(self):
        """Test rounding to a fixed number of places."""
        assert format_fixed(mpf("0.125"), 2) == "0.12"
        assert format_fixed(mpf("0.95"), 4) == "0.9500"

    def test_format_fixed_has_no_negative_zero(self):
        """Test that tiny negatives render as an unsigned zero."""
        assert format_fixed(mpf("-0.0001"), 2) == "0.00"

    def test_guaranteed_places(self):
        """Test the number of places a radius supports."""
        assert guaranteed_places(mpf(0), 20) == 20
        assert guaranteed_places(mpf("1e-10"), 20) == 9
        assert guaranteed_places(mpf(1), 20) == 0


class TestFactorisation:
    """Tests for factorisation helpers."""

    def test_factorize(self):
        """Test a factorisation with a cube."""
        assert factorize(999999) == {3: 3, 7: 1, 11: 1, 13: 1, 37: 1}
        assert factorize(1) == {}

    def test_factorize_rejects_non_positive(self):
        """Test the precondition on n."""
        with pytest.raises(PreconditionError):
            factorize(0)

    def test_factorize_rejects_huge_input(self):
        """Test the size limit."""
        with pytest.raises(FactorizationError):
            factorize(2**300 + 1)

    def test_multiplicative_functions(self):
        """Test phi, mu and the squarefree kernel."""
        assert euler_phi(1) == 1
        assert euler_phi(36) == 12
        assert mobius(1) == 1
        assert mobius(30) == -1
        assert mobius(12) == 0
        assert squarefree_kernel(360) == 30

    def test_divisors(self):
        """Test divisor listing."""
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_gcd_infty(self):
        """Test the largest divisor of x supported on the primes of y."""
        assert gcd_infty(360, 6) == 72
        assert gcd_infty(7, 6) == 1
        assert gcd_infty(50, 10) == 50

    def test_lcm_and_valuation(self):
        """Test lcm and p-adic valuation."""
        assert lcm(4, 6, 10) == 60
        assert lcm() == 1
        assert p_adic_valuation(48, 2) == 4
        assert p_adic_valuation(-45, 3) == 2


class TestSieves:
    """Tests for the numpy sieves."""

    def test_primes_up_to(self):
        """Test small prime lists."""
        assert primes_up_to(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert primes_up_to(1).tolist() == []
        assert primes_up_to(2).tolist() == [2]

    def test_first_primes_is_read_only(self):
        """Test that cached prime arrays cannot be modified."""
        primes = first_primes(5)

        assert primes.tolist() == [2, 3, 5, 7, 11]
        assert not primes.flags.writeable

    def test_nth_prime(self):
        """Test the k-th prime."""
        assert nth_prime(1) == 2
        assert nth_prime(1000) == 7919

    def test_smallest_factor_table(self):
        """Test smallest prime factors and table-based factorisation."""
        spf = smallest_factor_table(100)

        assert spf[91] == 7
        assert spf[97] == 97
        assert spf[64] == 2
        assert factor_with_table(360, spf) == factorize(360)
        assert factor_with_table(1001, spf) == {7: 1, 11: 1, 13: 1}

    def test_merge_factorizations(self):
        """Test merging of prime-exponent maps."""
        merged = merge_factorizations({2: 1, 3: 1}, {2: 2, 5: 1})

        assert merged == {2: 3, 3: 1, 5: 1}
