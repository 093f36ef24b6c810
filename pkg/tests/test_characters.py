"""Tests for roots of unity and Dirichlet characters."""

import cmath
import dataclasses
from collections import Counter
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest
from mpmath import mpc

from indexdens.characters.group import (
    DirichletCharacter,
    UnitGroupStructure,
    build_character_group,
    conjugate,
    evaluate,
    find_character,
    h_chi,
    is_principal,
    multiply,
    power,
    principal_character,
)
from indexdens.characters.roots import CyclotomicValue, ExactRootOfUnity
from indexdens.core.arith import divisors, euler_phi, mobius
from indexdens.core.errors import ModulusMismatchError, PreconditionError, SelectorError

I = ExactRootOfUnity.parse("i")
MINUS_ONE = ExactRootOfUnity.parse("-1")

FAST_MODULI = range(1, 41)
ALL_MODULI = [*FAST_MODULI, *(pytest.param(d, marks=pytest.mark.slow) for d in range(41, 101))]


def _character_sum(values) -> CyclotomicValue:
    total = CyclotomicValue.zero()
    for z in values:
        total = total + CyclotomicValue.from_root(z)
    return total


def _as_complex(z) -> complex:
    if isinstance(z, ExactRootOfUnity):
        return 0j if z.is_zero else cmath.exp(2j * cmath.pi * float(z.angle))
    return sum((c * cmath.exp(2j * cmath.pi * float(angle)) for angle, c in z.terms), 0j)


def _value_matrix(d: int) -> np.ndarray:
    """Rows indexed by characters, columns by units."""
    structure, characters = build_character_group(d)
    units = structure.units()
    return np.array([[_as_complex(chi.values[a]) for a in units] for chi in characters])


@lru_cache(maxsize=None)
def _mobius_table(limit: int) -> np.ndarray:
    return np.array([0] + [mobius(n) for n in range(1, limit + 1)], dtype=np.float64)


def _mobius_convolution(chi, limit: int) -> np.ndarray:
    """(mu * chi)(n) for 0 <= n <= limit in floating point."""
    mu = _mobius_table(limit)
    values = np.array([_as_complex(chi(n)) for n in range(limit + 1)])
    h = np.zeros(limit + 1, dtype=np.complex128)
    for m in range(1, limit + 1):
        if mu[m]:
            h[m::m] += mu[m] * values[1 : limit // m + 1]
    return h


class TestExactRootOfUnity:
    """Tests for ExactRootOfUnity."""

    def test_parse_named_roots(self):
        """Test the named forms."""
        assert ExactRootOfUnity.parse("1").is_one
        assert MINUS_ONE.angle == Fraction(1, 2)
        assert ExactRootOfUnity.parse("-i").angle == Fraction(3, 4)
        assert ExactRootOfUnity.parse("0").is_zero
        assert ExactRootOfUnity.parse("e(2/6)") == ExactRootOfUnity(1, 3)

    def test_parse_rejects_garbage(self):
        """Test that unknown text is rejected."""
        with pytest.raises(ValueError):
            ExactRootOfUnity.parse("2i")

    def test_multiplication_and_powers(self):
        """Test the group law."""
        assert I * I == MINUS_ONE
        assert I**4 == ExactRootOfUnity.one()
        assert (I * ExactRootOfUnity.zero()).is_zero
        assert I.order == 4

    def test_conjugate(self):
        """Test complex conjugation."""
        assert I.conjugate() == ExactRootOfUnity.parse("-i")
        assert ExactRootOfUnity.zero().conjugate().is_zero

    def test_numeric_rendering(self):
        """Test rendering at a stated precision."""
        assert I.to_complex(64) == mpc(0, 1)
        assert I.to_ball(64).radius == 0
        assert abs(complex(ExactRootOfUnity(1, 3)) - complex(-0.5, 0.8660254037844386)) < 1e-15

    def test_string(self):
        """Test string conversion."""
        assert str(I) == "i"
        assert str(ExactRootOfUnity(1, 3)) == "e(1/3)"
        assert str(ExactRootOfUnity.zero()) == "0"


class TestCyclotomicValue:
    """Tests for exact cyclotomic integers."""

    def test_sum_of_cube_roots_is_zero(self):
        """Test 1 + w + w^2 = 0 although the terms do not cancel syntactically."""
        w = ExactRootOfUnity(1, 3)
        total = _character_sum([ExactRootOfUnity.one(), w, w * w])

        assert not total.is_syntactically_zero
        assert total.is_zero()

    def test_integer_comparison(self):
        """Test comparison with integers and roots."""
        assert CyclotomicValue.from_root(I) * CyclotomicValue.from_root(I) == -1
        assert CyclotomicValue.from_int(2) == 2
        assert CyclotomicValue.from_root(I) == I
        assert CyclotomicValue.from_int(2) != 3

    def test_conjugate_product_is_real(self):
        """Test that z times its conjugate equals |z|^2."""
        z = CyclotomicValue.from_root(I) + CyclotomicValue.one()

        assert z * z.conjugate() == 2

    def test_conductor(self):
        """Test the conductor of a combination."""
        z = CyclotomicValue.from_root(I) + CyclotomicValue.from_root(ExactRootOfUnity(1, 3))

        assert z.conductor == 12

    def test_ball_rendering(self):
        """Test that the numeric ball contains the value."""
        z = CyclotomicValue.from_root(I) - CyclotomicValue.one()

        assert z.to_ball(128).contains(complex(-1, 1))
        assert CyclotomicValue.zero().to_ball(128).is_exact_zero


class TestUnitGroupStructure:
    """Tests for the generator decomposition."""

    def test_prime_modulus(self):
        """Test the smallest primitive root."""
        assert UnitGroupStructure.of(5).generators == ((2, 4),)
        assert UnitGroupStructure.of(7).generators == ((3, 6),)

    def test_powers_of_two(self):
        """Test -1 and 5 for 2^e with e >= 3."""
        assert UnitGroupStructure.of(4).generators == ((3, 2),)
        assert UnitGroupStructure.of(8).generators == ((7, 2), (5, 2))
        assert UnitGroupStructure.of(16).generators == ((15, 2), (5, 4))

    def test_crt_lift(self):
        """Test that local generators are 1 on the other components."""
        assert UnitGroupStructure.of(15).generators == ((11, 2), (7, 4))

    def test_trivial_groups(self):
        """Test moduli 1 and 2."""
        assert UnitGroupStructure.of(1).generators == ()
        assert UnitGroupStructure.of(2).size == 1

    def test_discrete_log(self):
        """Test exponent vectors."""
        structure = UnitGroupStructure.of(5)

        assert structure.discrete_log(4) == (2,)
        assert structure.discrete_log(3) == (3,)
        with pytest.raises(PreconditionError):
            structure.discrete_log(10)

    def test_units(self):
        """Test the unit list."""
        assert UnitGroupStructure.of(12).units() == [1, 5, 7, 11]

    def test_invalid_modulus(self):
        """Test the precondition on d."""
        with pytest.raises(PreconditionError):
            UnitGroupStructure.of(0)


class TestCharacterGroup:
    """Tests for build_character_group and character operations."""

    @pytest.mark.parametrize("d", [1, 2, 3, 5, 8, 12, 15, 24, 100])
    def test_group_has_phi_distinct_characters(self, d):
        """Test that there are phi(d) characters with distinct value tables."""
        structure, characters = build_character_group(d)
        units = structure.units()
        tables = {tuple(evaluate(chi, a) for a in units) for chi in characters}

        assert len(characters) == euler_phi(d)
        assert len(tables) == euler_phi(d)
        assert is_principal(characters[0])

    def test_trivial_character(self):
        """Test that the only character mod 1 is identically 1."""
        _, characters = build_character_group(1)

        assert len(characters) == 1
        assert all(characters[0](n).is_one for n in range(-3, 10))

    def test_values(self, psi):
        """Test psi(2) = i and the zero off the units."""
        assert evaluate(psi, 2) == I
        assert evaluate(psi, 3) == ExactRootOfUnity.parse("-i")
        assert evaluate(psi, 4) == MINUS_ONE
        assert evaluate(psi, 10).is_zero
        assert psi(7) == I

    def test_properties(self, psi):
        """Test order, reality and label."""
        assert psi.order == 4
        assert not psi.is_real
        assert power(psi, 2).is_real
        assert psi.label == "chi_5[1]"

    def test_wrong_exponent_count(self):
        """Test that exponent vectors must match the generators."""
        with pytest.raises(PreconditionError):
            DirichletCharacter(UnitGroupStructure.of(8), (1,))

    def test_conjugate_and_multiply(self, psi):
        """Test group operations."""
        conj = conjugate(psi)

        assert conj.exponents == (3,)
        assert is_principal(multiply(psi, conj))
        assert evaluate(power(psi, 2), 2) == MINUS_ONE
        assert power(psi, 5) == psi

    def test_multiply_mismatch(self, psi):
        """Test that characters of different moduli cannot be multiplied."""
        with pytest.raises(ModulusMismatchError):
            multiply(psi, principal_character(7))

    @pytest.mark.parametrize("d", [5, 8, 12, 15, 24])
    def test_row_orthogonality(self, d):
        """Test sum_a chi(a) = phi(d) [chi principal], exactly."""
        structure, characters = build_character_group(d)
        units = structure.units()

        for chi in characters:
            total = _character_sum(evaluate(chi, a) for a in units)
            expected = euler_phi(d) if is_principal(chi) else 0
            assert total == expected

    @pytest.mark.parametrize("d", [5, 8, 12, 15])
    def test_column_orthogonality(self, d):
        """Test sum_chi chi(a) = 0 for every unit a != 1, exactly."""
        structure, characters = build_character_group(d)

        for a in structure.units():
            total = _character_sum(evaluate(chi, a) for chi in characters)
            expected = euler_phi(d) if a == 1 else 0
            assert total == expected

    @pytest.mark.parametrize("d", ALL_MODULI)
    def test_row_sums_vanish_exactly(self, d):
        """Test sum_a chi(a) = 0 for every non-principal chi, in exact arithmetic."""
        structure, characters = build_character_group(d)
        units = structure.units()

        for chi in characters:
            total = CyclotomicValue.from_mapping(Counter(chi.values[a].angle for a in units))
            expected = euler_phi(d) if is_principal(chi) else 0
            assert total == expected, chi.label

    @pytest.mark.parametrize("d", range(1, 101))
    def test_orthogonality_relations(self, d):
        """Test M M^H = M^H M = phi(d) I for the value matrix M of every d <= 100."""
        matrix = _value_matrix(d)
        identity = euler_phi(d) * np.eye(euler_phi(d))

        np.testing.assert_allclose(matrix @ matrix.conj().T, identity, atol=1e-9)
        np.testing.assert_allclose(matrix.conj().T @ matrix, identity, atol=1e-9)

    def test_value_table_is_precomputed(self, psi):
        """Test that the values are fixed at construction and evaluation changes nothing."""
        table = psi.values

        assert isinstance(table, tuple)
        assert len(table) == 5
        assert [evaluate(psi, n) for n in range(-5, 10)] == [table[n % 5] for n in range(-5, 10)]
        assert psi.values is table

    def test_characters_are_immutable(self, psi):
        """Test that a character cannot be modified after construction."""
        with pytest.raises(dataclasses.FrozenInstanceError):
            psi._values = ()
        with pytest.raises(dataclasses.FrozenInstanceError):
            psi.exponents = (2,)

    def test_equality_ignores_the_table(self, psi):
        """Test that equal exponent vectors give equal, equally hashed characters."""
        again = DirichletCharacter(UnitGroupStructure.of(5), (5,))

        assert again == psi
        assert hash(again) == hash(psi)
        assert again.values == psi.values


class TestHChi:
    """Tests for h_chi = mu * chi."""

    def test_against_convolution(self, psi):
        """Test h_chi(n) = sum_{e | n} mu(n/e) chi(e) exactly."""
        chi12 = find_character(12, "chi(5)=-1;chi(7)=1")
        for chi in (psi, chi12):
            for n in range(1, 121):
                convolution = CyclotomicValue.zero()
                for e in divisors(n):
                    mu = mobius(n // e)
                    if mu:
                        convolution = convolution + CyclotomicValue.from_int(mu) * (
                            CyclotomicValue.from_root(evaluate(chi, e))
                        )
                assert h_chi(chi, n) == convolution, f"{chi.label} at n={n}"

    @pytest.mark.parametrize("d", range(1, 13))
    def test_against_numeric_convolution(self, d):
        """Test h_chi(n) for n <= 2000 and every chi mod d <= 12."""
        self._check_convolution(d, 2000)

    @pytest.mark.slow
    @pytest.mark.parametrize("d", range(1, 41))
    def test_against_numeric_convolution_to_ten_thousand(self, d):
        """Test h_chi(n) for n <= 10^4 and every chi mod d <= 40."""
        self._check_convolution(d, 10**4)

    @staticmethod
    def _check_convolution(d: int, limit: int) -> None:
        _, characters = build_character_group(d)
        for chi in characters:
            expected = _mobius_convolution(chi, limit)
            computed = np.array([0j] + [_as_complex(h_chi(chi, n)) for n in range(1, limit + 1)])
            np.testing.assert_allclose(computed, expected, atol=1e-9, err_msg=chi.label)

    def test_local_values(self, psi):
        """Test h at primes dividing the modulus and at chi(p) = 1."""
        assert h_chi(psi, 1) == 1
        assert h_chi(psi, 5) == -1
        assert h_chi(psi, 25).is_syntactically_zero
        assert h_chi(principal_character(5), 7).is_syntactically_zero
        assert h_chi(psi, 11).is_syntactically_zero

    def test_prime_power(self, psi):
        """Test h(p^k) = chi(p)^(k-1) (chi(p) - 1)."""
        i = CyclotomicValue.from_root(I)

        assert h_chi(psi, 2) == i - 1
        assert h_chi(psi, 4) == i * (i - 1)

    def test_invalid_argument(self, psi):
        """Test the precondition on n."""
        with pytest.raises(PreconditionError):
            h_chi(psi, 0)


class TestFindCharacter:
    """Tests for character selectors."""

    def test_pinned_value(self, psi):
        """Test the chi(g)=zeta form."""
        assert find_character(5, "chi(2)=i").exponents == (1,)
        assert find_character(5, "chi(2) = -1").exponents == (2,)
        assert find_character(5, {2: "-i"}).exponents == (3,)

    def test_principal(self):
        """Test the principal aliases."""
        assert is_principal(find_character(5, "principal"))
        assert is_principal(find_character(7, "trivial"))

    def test_exponent_vectors(self):
        """Test vectors as strings and iterables."""
        assert find_character(5, "1").exponents == (1,)
        assert find_character(8, "[1, 0]").exponents == (1, 0)
        assert find_character(8, (0, 1)).exponents == (0, 1)

    def test_several_pins(self):
        """Test pins joined by ';' and 'and'."""
        chi = find_character(8, "chi(3)=-1; chi(5)=1")

        assert chi.exponents == (1, 0)
        assert find_character(8, "chi(3)=-1 and chi(5)=1") == chi

    def test_ambiguous_selector(self):
        """Test that two matching characters are refused."""
        with pytest.raises(SelectorError, match="ambiguous"):
            find_character(8, "chi(3)=-1")

    def test_unmatched_selector(self):
        """Test that no matching character is refused."""
        with pytest.raises(SelectorError):
            find_character(5, "chi(2)=e(1/3)")

    def test_bad_vector_length(self):
        """Test vector length checks."""
        with pytest.raises(SelectorError):
            find_character(5, "[1, 0]")

    def test_unreadable_pin(self):
        """Test unreadable pins."""
        with pytest.raises(SelectorError):
            find_character(5, "psi(2)=i")
