"""
Computation defaults.

Every routine takes explicit keyword arguments; ComputeSettings gathers the
defaults in one place so the command line can override them wholesale.
"""

import math
from dataclasses import dataclass, fields, replace
from typing import Any

from indexdens.core.types import ExclusionConvention

DEFAULT_DIGITS = 20
DEFAULT_PRECISION = 192
DEFAULT_TERMS = 10**6
TEST_TERMS = 10**4
DEFAULT_EXACT_CUTOFF = 10**4
DEFAULT_COUNT_CEILING = 10**8
DEFAULT_HISTOGRAM_CAP = 100


def precision_for_digits(digits: int) -> int:
    """Working precision in bits for a requested number of decimal digits."""
    if digits < 1:
        raise ValueError("digits must be at least 1")
    return max(DEFAULT_PRECISION, math.ceil(digits * math.log2(10)) + 64)


@dataclass(frozen=True)
class ComputeSettings:
    """
    Defaults shared by the library and the command line.

    Attributes:
        digits: Decimal digits requested in output
        n_terms: Primes used by the accelerated B_chi product
        exact_cutoff: Primes up to this bound are multiplied in mpmath
        workers: Worker threads for block-parallel loops
        count_ceiling: Largest norm bound accepted by count
        histogram_cap: Largest index tallied in the index histogram
        convention: Treatment of primes with undefined index

    Example:
        >>> settings = ComputeSettings.default().with_overrides(digits=30, workers=4)
        >>> settings.precision
        192
    """

    digits: int = DEFAULT_DIGITS
    n_terms: int = DEFAULT_TERMS
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF
    workers: int = 1
    count_ceiling: int = DEFAULT_COUNT_CEILING
    histogram_cap: int = DEFAULT_HISTOGRAM_CAP
    convention: ExclusionConvention = ExclusionConvention.EXCLUDE

    def __post_init__(self) -> None:
        if self.digits < 1:
            raise ValueError("digits must be at least 1")
        if self.n_terms < 1:
            raise ValueError("n_terms must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.histogram_cap < 1:
            raise ValueError("histogram_cap must be at least 1")

    @property
    def precision(self) -> int:
        """Working precision in bits."""
        return precision_for_digits(self.digits)

    @staticmethod
    def default() -> "ComputeSettings":
        """Create the default settings."""
        return ComputeSettings()

    def with_overrides(self, **overrides: Any) -> "ComputeSettings":
        """Return a copy with every non-None override applied."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"Unknown settings: {', '.join(sorted(unknown))}")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})
