"""
Consistency rules for degree models.

A degree model (r, n0, C) must satisfy:
  - C is defined exactly on the divisors of n0, with C(1) = 1 and C(g) >= 1
  - C(g) | C(g') whenever g | g'
  - phi(n) n^r / C(gcd(n, n0)) is an integer for every n up to the integrality limit
"""

import math
from dataclasses import dataclass
from typing import Mapping, Optional

from indexdens.core.arith import divisors, euler_phi
from indexdens.validation.report import ValidationReport


@dataclass
class ModelRules:
    """
    Rules for validating degree models.

    Attributes:
        integrality_limit: Check integrality of degrees for n up to this bound;
            None means max(4 n0^2, 64)
        require_description: Warn when a model carries no description
        max_n0: Reject models whose n0 exceeds this bound

    Example:
        >>> rules = (ModelRules.builder()
        ...     .integrality_limit(500)
        ...     .require_description(False)
        ...     .build()
        ... )
    """

    integrality_limit: Optional[int] = None
    require_description: bool = True
    max_n0: Optional[int] = None

    @staticmethod
    def builder() -> "ModelRulesBuilder":
        """Create a new ModelRulesBuilder."""
        return ModelRulesBuilder()

    @staticmethod
    def default() -> "ModelRules":
        """Create default model rules."""
        return ModelRules()

    def limit_for(self, n0: int) -> int:
        if self.integrality_limit is not None:
            return self.integrality_limit
        return max(4 * n0 * n0, 64)

    def validate_model(
        self,
        rank: int,
        n0: int,
        corrections: Mapping[int, int],
        description: str = "",
    ) -> ValidationReport:
        """
        Validate a degree model against the rules.

        Args:
            rank: r
            n0: Modulus governing C
            corrections: Mapping divisor g of n0 -> C(g)
            description: Provenance text

        Returns:
            ValidationReport with any issues found
        """
        report = ValidationReport()

        if rank < 1:
            report.add_error(field="rank", message="Rank must be positive", current_value=rank,
                             expected="r >= 1")
        if n0 < 1:
            report.add_error(field="n0", message="n0 must be positive", current_value=n0,
                             expected="n0 >= 1")
            return report
        if self.max_n0 is not None and n0 > self.max_n0:
            report.add_error(
                field="n0",
                message="n0 exceeds the configured maximum",
                current_value=n0,
                expected=f"At most {self.max_n0}",
            )

        # Domain of C
        expected_keys = set(divisors(n0))
        missing = sorted(expected_keys - set(corrections))
        extra = sorted(set(corrections) - expected_keys)
        if missing:
            report.add_error(
                field="corrections",
                message="C is not given at every divisor of n0",
                current_value=missing,
                expected=f"Entries for all of {sorted(expected_keys)}",
                suggestion="Add a correction entry for each missing divisor",
            )
        if extra:
            report.add_error(
                field="corrections",
                message="Corrections given at non-divisors of n0",
                current_value=extra,
                expected=f"Only divisors of {n0}",
            )

        # Values of C
        for g, c in sorted(corrections.items()):
            if not isinstance(c, int) or c < 1:
                report.add_error(
                    field=f"C({g})",
                    message="Correction factors must be positive integers",
                    current_value=c,
                )
        if corrections.get(1, 1) != 1:
            report.add_error(field="C(1)", message="C(1) must equal 1",
                             current_value=corrections.get(1), expected="1")
        if not report.is_valid:
            return report

        # Divisibility lattice
        for g in sorted(expected_keys):
            for h in sorted(expected_keys):
                if h % g == 0 and corrections[h] % corrections[g] != 0:
                    report.add_error(
                        field=f"C({h})",
                        message=f"C({g}) does not divide C({h}) although {g} | {h}",
                        current_value=f"C({g})={corrections[g]}, C({h})={corrections[h]}",
                        suggestion="Correction factors must be monotone for divisibility",
                    )

        # Integrality of the derived degrees
        limit = self.limit_for(n0)
        for n in range(1, limit + 1):
            c = corrections[math.gcd(n, n0)]
            if (euler_phi(n) * n**rank) % c != 0:
                report.add_error(
                    field=f"degree({n})",
                    message="Derived degree phi(n) n^r / C(gcd(n, n0)) is not an integer",
                    current_value=f"{euler_phi(n) * n**rank}/{c}",
                )
                break

        if self.require_description and not description.strip():
            report.add_warning(
                field="description",
                message="Model has no description",
                suggestion="Name the field K and the group G the model describes",
            )

        return report

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "integrality_limit": self.integrality_limit,
            "require_description": self.require_description,
            "max_n0": self.max_n0,
        }


class ModelRulesBuilder:
    """
    Builder for constructing ModelRules with fluent syntax.

    Example:
        >>> rules = ModelRules.builder().max_n0(10**4).build()
    """

    def __init__(self) -> None:
        self._integrality_limit: Optional[int] = None
        self._require_description = True
        self._max_n0: Optional[int] = None

    def integrality_limit(self, limit: int) -> "ModelRulesBuilder":
        """Set the largest n whose degree is checked for integrality."""
        if limit < 1:
            raise ValueError("Integrality limit must be at least 1")
        self._integrality_limit = limit
        return self

    def require_description(self, required: bool = True) -> "ModelRulesBuilder":
        self._require_description = required
        return self

    def max_n0(self, bound: int) -> "ModelRulesBuilder":
        """Set the largest accepted n0."""
        if bound < 1:
            raise ValueError("Maximum n0 must be at least 1")
        self._max_n0 = bound
        return self

    def build(self) -> ModelRules:
        """Build the ModelRules object."""
        return ModelRules(
            integrality_limit=self._integrality_limit,
            require_description=self._require_description,
            max_n0=self._max_n0,
        )
