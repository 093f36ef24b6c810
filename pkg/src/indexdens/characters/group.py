"""
Dirichlet characters modulo d.

(Z/dZ)^x is decomposed into cyclic factors with a fixed generator choice:
the smallest primitive root for each odd prime power, -1 for 4, and -1
together with 5 for 2^e with e >= 3. Each local generator is lifted to a
residue mod d by the Chinese remainder theorem (1 on the other components).
A character is the vector of exponents k_j with chi(g_j) = e(k_j / ord(g_j)).
"""

import itertools
import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import Iterable, Mapping, Union

from sympy.ntheory import n_order
from sympy.ntheory.modular import crt

from indexdens.characters.roots import CyclotomicValue, ExactRootOfUnity
from indexdens.core.arith import euler_phi, factorize, lcm
from indexdens.core.errors import ModulusMismatchError, PreconditionError, SelectorError

logger = logging.getLogger(__name__)

_PIN_PATTERN = re.compile(r"^\s*chi\(\s*(-?\d+)\s*\)\s*=\s*(.+?)\s*$", re.IGNORECASE)
_VECTOR_PATTERN = re.compile(r"^\s*\[?\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]?\s*$")


def _smallest_primitive_root(p: int, e: int) -> int:
    modulus = p**e
    target = (p - 1) * p ** (e - 1)
    for g in range(2, modulus):
        if g % p and n_order(g, modulus) == target:
            return g
    raise PreconditionError(f"No primitive root modulo {modulus}")


def _local_generators(p: int, e: int) -> list[tuple[int, int]]:
    """Generators (residue mod p^e, order) of (Z/p^eZ)^x."""
    if p != 2:
        return [(_smallest_primitive_root(p, e), (p - 1) * p ** (e - 1))]
    if e == 1:
        return []
    if e == 2:
        return [(3, 2)]
    return [(2**e - 1, 2), (5, 2 ** (e - 2))]


@dataclass(frozen=True)
class UnitGroupStructure:
    """
    Cyclic decomposition of (Z/dZ)^x.

    Attributes:
        modulus: d
        generators: (residue mod d, order) pairs; their direct product is the group

    Example:
        >>> structure = UnitGroupStructure.of(5)
        >>> structure.generators
        ((2, 4),)
    """

    modulus: int
    generators: tuple[tuple[int, int], ...]

    @staticmethod
    def of(d: int) -> "UnitGroupStructure":
        return _structure(d)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(order for _, order in self.generators)

    @property
    def size(self) -> int:
        return reduce(lambda a, b: a * b, self.orders, 1)

    @cached_property
    def log_table(self) -> dict[int, tuple[int, ...]]:
        """Exponent vector of every unit residue."""
        d = self.modulus
        table: dict[int, tuple[int, ...]] = {}
        for vector in itertools.product(*(range(order) for order in self.orders)):
            residue = 1 % d
            for (g, _), k in zip(self.generators, vector):
                residue = residue * pow(g, k, d) % d
            table[residue] = vector
        return table

    def discrete_log(self, n: int) -> tuple[int, ...]:
        """
        Exponent vector of n against the generators.

        Raises:
            PreconditionError: If n is not a unit modulo d
        """
        residue = n % self.modulus
        try:
            return self.log_table[residue]
        except KeyError:
            raise PreconditionError(f"{n} is not a unit modulo {self.modulus}") from None

    def units(self) -> list[int]:
        return sorted(self.log_table)


@lru_cache(maxsize=256)
def _structure(d: int) -> UnitGroupStructure:
    if d < 1:
        raise PreconditionError(f"Modulus must be positive, got {d}")
    factors = factorize(d)
    generators: list[tuple[int, int]] = []
    for p, e in factors.items():
        local_modulus = p**e
        others = d // local_modulus
        for g, order in _local_generators(p, e):
            if others == 1:
                lifted = g
            else:
                solution = crt([local_modulus, others], [g, 1])
                lifted = int(solution[0]) % d
            generators.append((lifted, order))
    structure = UnitGroupStructure(d, tuple(generators))
    if structure.size != euler_phi(d):
        raise PreconditionError(f"Generator orders do not multiply to phi({d})")
    # filled before the structure is shared through the cache
    _ = structure.log_table
    logger.debug(f"Unit group mod {d}: generators {structure.generators}")
    return structure


@dataclass(frozen=True)
class DirichletCharacter:
    """
    A Dirichlet character modulo d.

    Attributes:
        structure: Generator decomposition the exponents refer to
        exponents: k_j with chi(g_j) = e(k_j / ord(g_j)), reduced mod ord(g_j)
    """

    structure: UnitGroupStructure
    exponents: tuple[int, ...]
    _values: tuple[ExactRootOfUnity, ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        orders = self.structure.orders
        if len(self.exponents) != len(orders):
            raise PreconditionError(
                f"Expected {len(orders)} exponents for modulus {self.modulus}, "
                f"got {len(self.exponents)}"
            )
        reduced = tuple(k % order for k, order in zip(self.exponents, orders))
        object.__setattr__(self, "exponents", reduced)
        object.__setattr__(self, "_values", self._value_table())

    def _value_table(self) -> tuple[ExactRootOfUnity, ...]:
        structure = self.structure
        values = [ExactRootOfUnity.zero()] * structure.modulus
        for residue, vector in structure.log_table.items():
            angle = sum(
                (Fraction(k * v, order) for k, v, order in zip(self.exponents, vector, structure.orders)),
                Fraction(0),
            )
            values[residue] = ExactRootOfUnity.from_angle(angle)
        return tuple(values)

    @property
    def values(self) -> tuple[ExactRootOfUnity, ...]:
        """chi(0), chi(1), ..., chi(d - 1)."""
        return self._values

    @property
    def modulus(self) -> int:
        return self.structure.modulus

    @property
    def order(self) -> int:
        return lcm(*(o // math.gcd(k, o) for k, o in zip(self.exponents, self.structure.orders)))

    @property
    def label(self) -> str:
        return f"chi_{self.modulus}[{','.join(str(k) for k in self.exponents)}]"

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    def __call__(self, n: int) -> ExactRootOfUnity:
        return evaluate(self, n)

    def __str__(self) -> str:
        return self.label


CharacterSelector = Union[str, Iterable[int], Mapping[int, Union[str, ExactRootOfUnity]]]


def build_character_group(d: int) -> tuple[UnitGroupStructure, list[DirichletCharacter]]:
    """
    All phi(d) characters modulo d, principal first.

    Characters are listed in lexicographic order of their exponent vectors.

    Example:
        >>> structure, characters = build_character_group(5)
        >>> [c.exponents for c in characters]
        [(0,), (1,), (2,), (3,)]
    """
    structure = UnitGroupStructure.of(d)
    characters = [
        DirichletCharacter(structure, vector)
        for vector in itertools.product(*(range(order) for order in structure.orders))
    ]
    return structure, characters


def principal_character(d: int) -> DirichletCharacter:
    structure = UnitGroupStructure.of(d)
    return DirichletCharacter(structure, tuple(0 for _ in structure.generators))


def evaluate(chi: DirichletCharacter, n: int) -> ExactRootOfUnity:
    """chi(n) exactly; zero when gcd(n, d) > 1."""
    return chi.values[n % chi.modulus]


def h_chi(chi: DirichletCharacter, n: int) -> CyclotomicValue:
    """
    (mu * chi)(n), the multiplicative function with h(p^k) = chi(p)^(k-1) (chi(p) - 1).

    Raises:
        PreconditionError: If n < 1
        FactorizationError: If n cannot be factored
    """
    if n < 1:
        raise PreconditionError(f"h_chi needs n >= 1, got {n}")
    result = CyclotomicValue.one()
    for p, k in factorize(n).items():
        z = evaluate(chi, p)
        if z.is_zero:
            if k >= 2:
                return CyclotomicValue.zero()
            factor = CyclotomicValue.from_int(-1)
        elif z.is_one:
            return CyclotomicValue.zero()
        else:
            factor = CyclotomicValue.from_root(z**k) - CyclotomicValue.from_root(z ** (k - 1))
        result = result * factor
    return result


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    return DirichletCharacter(chi.structure, tuple(-k for k in chi.exponents))


def multiply(chi: DirichletCharacter, other: DirichletCharacter) -> DirichletCharacter:
    """
    Pointwise product of two characters of the same modulus.

    Raises:
        ModulusMismatchError: If the moduli differ
    """
    if chi.modulus != other.modulus:
        raise ModulusMismatchError(
            f"Cannot multiply characters mod {chi.modulus} and mod {other.modulus}"
        )
    return DirichletCharacter(
        chi.structure, tuple(a + b for a, b in zip(chi.exponents, other.exponents))
    )


def power(chi: DirichletCharacter, k: int) -> DirichletCharacter:
    return DirichletCharacter(chi.structure, tuple(k * e for e in chi.exponents))


def is_principal(chi: DirichletCharacter) -> bool:
    return all(k == 0 for k in chi.exponents)


def _parse_pins(text: str) -> dict[int, ExactRootOfUnity]:
    pins: dict[int, ExactRootOfUnity] = {}
    for part in re.split(r"[;&]|\band\b", text):
        if not part.strip():
            continue
        match = _PIN_PATTERN.match(part)
        if match is None:
            raise SelectorError(f"Cannot read character pin {part.strip()!r}")
        try:
            pins[int(match.group(1))] = ExactRootOfUnity.parse(match.group(2))
        except ValueError as exc:
            raise SelectorError(str(exc)) from exc
    return pins


def find_character(d: int, selector: CharacterSelector) -> DirichletCharacter:
    """
    Resolve a selector to the unique matching character modulo d.

    Accepted selectors:
        "principal"            the principal character
        "1" or "[1, 0]"        an exponent vector against the generators
        "chi(2)=i"             pinned values, several joined by ';'
        {2: "i"}               pinned values as a mapping
        (1, 0)                 an exponent vector

    Raises:
        SelectorError: If no character or more than one matches

    Example:
        >>> find_character(5, "chi(2)=i").exponents
        (1,)
    """
    structure, characters = build_character_group(d)
    if isinstance(selector, str):
        text = selector.strip()
        if text.lower() in ("principal", "trivial", ""):
            return characters[0]
        vector_match = _VECTOR_PATTERN.match(text)
        if vector_match is not None:
            body = vector_match.group(1)
            vector = tuple(int(v) for v in body.split(",")) if body else ()
            if len(vector) != len(structure.generators):
                raise SelectorError(
                    f"Modulus {d} has {len(structure.generators)} generators "
                    f"{[g for g, _ in structure.generators]}; got exponents {vector}"
                )
            return DirichletCharacter(structure, vector)
        pins = _parse_pins(text)
    elif isinstance(selector, Mapping):
        pins = {
            int(n): z if isinstance(z, ExactRootOfUnity) else ExactRootOfUnity.parse(str(z))
            for n, z in selector.items()
        }
    else:
        vector = tuple(int(v) for v in selector)
        if len(vector) != len(structure.generators):
            raise SelectorError(f"Expected {len(structure.generators)} exponents, got {vector}")
        return DirichletCharacter(structure, vector)

    matches = [chi for chi in characters if all(evaluate(chi, n) == z for n, z in pins.items())]
    if not matches:
        raise SelectorError(f"No character mod {d} satisfies {selector!r}")
    if len(matches) > 1:
        labels = ", ".join(chi.label for chi in matches)
        raise SelectorError(f"Selector {selector!r} is ambiguous mod {d}: {labels}")
    return matches[0]
