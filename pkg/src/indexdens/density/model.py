"""
Degree models for Kummer-type extensions.

A model records the rank r of G, an integer n0 and the correction factors
C(g) for g | n0, so that

    [K_{n,n} : K] = phi(n) n^r / C(gcd(n, n0)).
"""

import json
import logging
import math
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Union

from indexdens.core.arith import euler_phi
from indexdens.core.errors import InconsistentModelError, PreconditionError
from indexdens.validation.report import ValidationReport
from indexdens.validation.rules import ModelRules

logger = logging.getLogger(__name__)

_TOP_LEVEL_KEYS = {"name", "rank", "n0", "description", "corrections"}
_CORRECTION_KEYS = {"divisor", "C"}


@dataclass(frozen=True)
class DegreeModel:
    """
    Degree data (r, n0, C) of a pair (K, G).

    Attributes:
        rank: Rank r of G
        n0: C(n) depends only on gcd(n, n0)
        corrections: (g, C(g)) for every divisor g of n0, ascending
        name: Short identifier
        description: Provenance, naming K and G

    Example:
        >>> model = (DegreeModel.builder()
        ...     .name("q-sqrt5-golden")
        ...     .rank(1)
        ...     .n0(5)
        ...     .correction(5, 2)
        ...     .description("K = Q(sqrt5), G = <(1+sqrt5)/2>")
        ...     .build()
        ... )
        >>> model.degree(5)
        10
    """

    rank: int
    n0: int
    corrections: tuple[tuple[int, int], ...]
    name: str = ""
    description: str = ""

    @staticmethod
    def builder() -> "DegreeModelBuilder":
        """Create a new DegreeModelBuilder."""
        return DegreeModelBuilder()

    @staticmethod
    def generic(rank: int = 1) -> "DegreeModel":
        """The model with C identically 1."""
        return (
            DegreeModelBuilder()
            .name(f"generic-r{rank}")
            .rank(rank)
            .n0(1)
            .description(f"Generic rank-{rank} group: all Kummer degrees maximal (C = 1)")
            .build()
        )

    @property
    def table(self) -> dict[int, int]:
        return dict(self.corrections)

    def C(self, n: int) -> int:
        """Correction factor C(n) = C(gcd(n, n0))."""
        return self.table[math.gcd(n, self.n0)]

    def degree(self, n: int) -> int:
        """
        [K_{n,n} : K] = phi(n) n^r / C(gcd(n, n0)).

        Raises:
            PreconditionError: If n < 1
            InconsistentModelError: If the quotient is not an integer
        """
        if n < 1:
            raise PreconditionError(f"degree needs n >= 1, got {n}")
        numerator = euler_phi(n) * n**self.rank
        c = self.C(n)
        if numerator % c:
            raise InconsistentModelError(
                f"Model {self.label} gives non-integral degree {numerator}/{c} at n={n}"
            )
        return numerator // c

    @property
    def label(self) -> str:
        return self.name or f"model(r={self.rank}, n0={self.n0})"

    def validate(self, rules: Optional[ModelRules] = None) -> ValidationReport:
        """Check the model against `rules` (default rules when omitted)."""
        rules = rules or ModelRules.default()
        return rules.validate_model(self.rank, self.n0, self.table, self.description)

    # ==================== Serialization ====================

    def to_dict(self) -> dict:
        """Convert the model to its JSON form."""
        return {
            "name": self.name,
            "rank": self.rank,
            "n0": self.n0,
            "description": self.description,
            "corrections": [{"divisor": g, "C": c} for g, c in self.corrections],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "DegreeModel":
        """
        Create a model from its JSON form.

        Raises:
            InconsistentModelError: On unknown keys, missing keys or failed validation
        """
        if not isinstance(data, Mapping):
            raise InconsistentModelError("Model must be a JSON object")
        unknown = set(data) - _TOP_LEVEL_KEYS
        if unknown:
            raise InconsistentModelError(f"Unknown model keys: {', '.join(sorted(unknown))}")
        for key in ("rank", "n0"):
            if key not in data:
                raise InconsistentModelError(f"Model is missing required key '{key}'")

        builder = (
            DegreeModelBuilder()
            .name(str(data.get("name", "")))
            .description(str(data.get("description", "")))
        )
        try:
            builder.rank(int(data["rank"])).n0(int(data["n0"]))
            for entry in data.get("corrections", []):
                if not isinstance(entry, Mapping):
                    raise InconsistentModelError("Each correction must be an object")
                extra = set(entry) - _CORRECTION_KEYS
                if extra:
                    raise InconsistentModelError(
                        f"Unknown correction keys: {', '.join(sorted(extra))}"
                    )
                if not _CORRECTION_KEYS <= set(entry):
                    raise InconsistentModelError("Corrections need both 'divisor' and 'C'")
                builder.correction(int(entry["divisor"]), int(entry["C"]))
        except InconsistentModelError:
            raise
        except (TypeError, ValueError) as exc:
            raise InconsistentModelError(str(exc)) from exc
        return builder.build()

    def save(self, path: str) -> None:
        """
        Save the model as JSON.

        Example:
            >>> model.save("golden.json")
        """
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)

    @classmethod
    def load(cls, path: str) -> "DegreeModel":
        """
        Load a model from a JSON file.

        Example:
            >>> model = DegreeModel.load("golden.json")
        """
        with open(path) as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as exc:
                raise InconsistentModelError(f"{path} is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def __str__(self) -> str:
        table = ", ".join(f"C({g})={c}" for g, c in self.corrections)
        return f"{self.label}: r={self.rank}, n0={self.n0}, {table}"


class DegreeModelBuilder:
    """
    Builder for constructing DegreeModel with fluent syntax.

    Setters reject bad arguments immediately; build() runs the full
    consistency check and raises InconsistentModelError with its report.
    C(1) = 1 is filled in when not given.
    """

    def __init__(self) -> None:
        self._name = ""
        self._description = ""
        self._rank: Optional[int] = None
        self._n0: Optional[int] = None
        self._corrections: dict[int, int] = {}
        self._rules: Optional[ModelRules] = None

    def name(self, name: str) -> "DegreeModelBuilder":
        self._name = name
        return self

    def description(self, text: str) -> "DegreeModelBuilder":
        self._description = text
        return self

    def rank(self, r: int) -> "DegreeModelBuilder":
        """Set the rank of G."""
        if r < 1:
            raise PreconditionError("Rank must be at least 1")
        self._rank = r
        return self

    def n0(self, n0: int) -> "DegreeModelBuilder":
        if n0 < 1:
            raise PreconditionError("n0 must be at least 1")
        self._n0 = n0
        return self

    def correction(self, divisor: int, c: int) -> "DegreeModelBuilder":
        """Set C(divisor) = c."""
        if divisor < 1:
            raise PreconditionError("Divisors must be positive")
        if c < 1:
            raise PreconditionError("Correction factors must be positive")
        self._corrections[divisor] = c
        return self

    def corrections(self, table: Mapping[int, int]) -> "DegreeModelBuilder":
        for divisor, c in table.items():
            self.correction(divisor, c)
        return self

    def rules(self, rules: ModelRules) -> "DegreeModelBuilder":
        self._rules = rules
        return self

    def build(self) -> DegreeModel:
        """
        Build and validate the model.

        Raises:
            InconsistentModelError: If rank or n0 is unset or a rule fails
        """
        if self._rank is None or self._n0 is None:
            raise InconsistentModelError("Both rank and n0 must be set")
        table = dict(self._corrections)
        table.setdefault(1, 1)
        model = DegreeModel(
            rank=self._rank,
            n0=self._n0,
            corrections=tuple(sorted(table.items())),
            name=self._name,
            description=self._description,
        )
        report = model.validate(self._rules)
        if not report.is_valid:
            raise InconsistentModelError(
                f"Degree model {model.label} is inconsistent:\n{report}", report
            )
        for warning in report.warnings:
            logger.warning(f"{model.label}: {warning.message}")
        return model


GENERIC_R1 = DegreeModel.generic(1)

Q_SQRT5_GOLDEN = (
    DegreeModelBuilder()
    .name("q-sqrt5-golden")
    .rank(1)
    .n0(5)
    .correction(5, 2)
    .description(
        "K = Q(sqrt5), G = <(1+sqrt5)/2>: [K_{n,n}:K] = n phi(n) if 5 does not divide n, "
        "n phi(n)/2 otherwise (sqrt5 lies in Q(zeta_5))"
    )
    .build()
)

Q_SQRT5_SECOND = (
    DegreeModelBuilder()
    .name("q-sqrt5-second")
    .rank(1)
    .n0(10)
    .corrections({2: 1, 5: 2, 10: 4})
    .description(
        "K = Q(sqrt5), G = <-(5+sqrt5)/2>: [K_{n,n}:K] = n phi(n) if 5 does not divide n, "
        "n phi(n)/2 if 5 | n and n is odd, n phi(n)/4 if 10 | n"
    )
    .build()
)

BUILTIN_MODELS: dict[str, DegreeModel] = {
    model.name: model for model in (GENERIC_R1, Q_SQRT5_GOLDEN, Q_SQRT5_SECOND)
}


def resolve_model(name_or_path: Union[str, DegreeModel]) -> DegreeModel:
    """
    A builtin model by name, "generic-r<k>" for any rank, or a model file.

    Raises:
        InconsistentModelError: If the file is invalid
        PreconditionError: If the name is unknown and no such file exists
    """
    if isinstance(name_or_path, DegreeModel):
        return name_or_path
    if name_or_path in BUILTIN_MODELS:
        return BUILTIN_MODELS[name_or_path]
    if name_or_path.startswith("generic-r") and name_or_path[len("generic-r"):].isdigit():
        return DegreeModel.generic(int(name_or_path[len("generic-r"):]))
    try:
        return DegreeModel.load(name_or_path)
    except FileNotFoundError:
        known = ", ".join(sorted(BUILTIN_MODELS))
        raise PreconditionError(
            f"No builtin model or file named {name_or_path!r} (builtins: {known})"
        ) from None
