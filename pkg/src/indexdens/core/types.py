"""
Type definitions and enums for indexdens.

These types name the concepts that travel between the character, analytic,
density and harness layers and out through the command line.
"""

from enum import Enum


class Positivity(str, Enum):
    """Outcome of the positivity predicate for dens_G(a, d)."""

    POSITIVE = "positive"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


class PrimeBehaviour(str, Enum):
    """How a rational prime decomposes in the field under study."""

    RATIONAL = "rational"
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    def __str__(self) -> str:
        return self.value


class ExclusionConvention(str, Enum):
    """
    Treatment of primes where the index is undefined.

    EXCLUDE drops them from both numerator and denominator.
    COUNT_IN_TOTAL keeps them in pi_K but in no residue class.
    """

    EXCLUDE = "exclude"
    COUNT_IN_TOTAL = "count-in-total"

    def __str__(self) -> str:
        return self.value


class OutputFormat(str, Enum):
    """Rendering of command output."""

    TABLE = "table"
    RECORDS = "records"
    CSV = "csv"

    def __str__(self) -> str:
        return self.value
