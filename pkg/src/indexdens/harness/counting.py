"""
Empirical index statistics over prime ideals.

For each prime ideal of norm up to x the generators of G are reduced into
the residue field, their orders combined by lcm, and the index
(q - 1) / |G mod p| tallied by residue class mod d.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import numpy as np
import pandas as pd

from indexdens.core.arith import lcm, p_adic_valuation, primes_up_to, smallest_factor_table
from indexdens.core.errors import PreconditionError
from indexdens.core.settings import DEFAULT_COUNT_CEILING, DEFAULT_HISTOGRAM_CAP
from indexdens.core.types import ExclusionConvention, PrimeBehaviour
from indexdens.harness.fields import FieldElement, GroupSpec, QuadraticFieldSpec
from indexdens.harness.primes import PrimeRecord, records_for_prime
from indexdens.harness.residue import PrimeField, QuadraticExtensionField, ResidueField

logger = logging.getLogger(__name__)

BLOCK_PRIMES = 4096
SPF_TABLE_CAP = 10**7


@dataclass
class CountReport:
    """
    Tallies of the index mod d over prime ideals of norm <= x.

    Attributes:
        x: Norm bound
        d: Modulus
        counts: counts[a] = number of primes with index = a mod d
        counted: Primes with a defined index
        skipped: Primes where the index is undefined
        index_histogram: t -> number of primes with index exactly t, for t <= cap
        histogram_cap: Largest tallied index
        convention: Treatment of skipped primes in pi_K

    Example:
        >>> report = count(QuadraticFieldSpec.rational(), GroupSpec.parse(QuadraticFieldSpec.rational(), ["2"]), 1000, 2)
        >>> sum(report.counts) == report.counted
        True
    """

    x: int
    d: int
    counts: list[int] = field(default_factory=list)
    counted: int = 0
    skipped: int = 0
    index_histogram: dict[int, int] = field(default_factory=dict)
    histogram_cap: int = DEFAULT_HISTOGRAM_CAP
    convention: ExclusionConvention = ExclusionConvention.EXCLUDE

    def __post_init__(self) -> None:
        if not self.counts:
            self.counts = [0] * self.d

    @property
    def pi_K(self) -> int:
        if self.convention == ExclusionConvention.COUNT_IN_TOTAL:
            return self.counted + self.skipped
        return self.counted

    def record(self, index: Optional[int]) -> None:
        if index is None:
            self.skipped += 1
            return
        self.counted += 1
        self.counts[index % self.d] += 1
        if index <= self.histogram_cap:
            self.index_histogram[index] = self.index_histogram.get(index, 0) + 1

    def merge(self, other: "CountReport") -> "CountReport":
        """Componentwise sum of two reports for the same (x, d)."""
        if (other.x, other.d) != (self.x, self.d):
            raise PreconditionError("Can only merge reports with the same x and d")
        histogram = dict(self.index_histogram)
        for t, n in other.index_histogram.items():
            histogram[t] = histogram.get(t, 0) + n
        return CountReport(
            x=self.x,
            d=self.d,
            counts=[a + b for a, b in zip(self.counts, other.counts)],
            counted=self.counted + other.counted,
            skipped=self.skipped + other.skipped,
            index_histogram=dict(sorted(histogram.items())),
            histogram_cap=self.histogram_cap,
            convention=self.convention,
        )

    @property
    def ratios(self) -> list[Fraction]:
        """counts[a] / pi_K for every residue a."""
        if self.pi_K == 0:
            return [Fraction(0)] * self.d
        return [Fraction(c, self.pi_K) for c in self.counts]

    def to_frame(self) -> pd.DataFrame:
        """
        One row per residue class.

        Returns:
            DataFrame with columns residue, count, ratio
        """
        return pd.DataFrame(
            {
                "residue": list(range(self.d)),
                "count": self.counts,
                "ratio": [float(r) for r in self.ratios],
            }
        )

    def histogram_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "index": list(self.index_histogram),
                "count": list(self.index_histogram.values()),
            }
        )


def _residue_field(record: PrimeRecord, field_spec: QuadraticFieldSpec) -> ResidueField:
    if record.behaviour == PrimeBehaviour.INERT:
        c1, c0 = field_spec.omega_relation
        return QuadraticExtensionField(record.p, c1, c0)
    return PrimeField(record.p)


def reduce_element(element: FieldElement, record: PrimeRecord) -> Optional[Any]:
    """
    Image of a field element in the residue field, or None when it is not a unit there.
    """
    p = record.p
    A, B, m = element.A, element.B, element.m
    c1, _ = element.field.omega_relation
    behaviour = record.behaviour

    if behaviour == PrimeBehaviour.RAMIFIED:
        return None
    if behaviour == PrimeBehaviour.RATIONAL:
        if (A * m) % p == 0:
            return None
        return A * pow(m, -1, p) % p
    if behaviour == PrimeBehaviour.INERT:
        if m % p == 0:
            return None
        a, b = A % p, B % p
        if a == 0 and b == 0:
            return None
        inv = pow(m, -1, p)
        return (a * inv % p, b * inv % p)

    # split: the ideal has residue map w -> record.omega
    omega = record.omega
    if m % p:
        image = (A + B * omega) * pow(m, -1, p) % p
        return image if image else None
    # p | m: alpha = N(beta) / (m * conj(beta)) with conj(w) = c1 - w
    conj_image = (A + B * (c1 - omega)) % p
    if conj_image == 0:
        return None
    norm = element.numerator_norm
    if norm == 0 or p_adic_valuation(norm, p) != p_adic_valuation(m, p):
        return None
    scale = p ** p_adic_valuation(m, p)
    unit = (norm // scale) * pow(m // scale, -1, p) % p
    return unit * pow(conj_image, -1, p) % p


def index_at_prime(
    record: PrimeRecord, group: GroupSpec, spf: Optional[np.ndarray] = None
) -> Optional[int]:
    """
    Index of G mod p in the multiplicative group of the residue field.

    Returns:
        The index, or None when the prime is ramified or some generator is not a unit

    Example:
        >>> Q = QuadraticFieldSpec.rational()
        >>> index_at_prime(PrimeRecord(7, PrimeBehaviour.RATIONAL, 7), GroupSpec.parse(Q, ["4"]))
        2
    """
    if record.ramified:
        return None
    images = []
    for generator in group.generators:
        image = reduce_element(generator, record)
        if image is None:
            return None
        images.append(image)
    residue_field = _residue_field(record, group.field)
    factors = residue_field.group_order_factors(spf)
    subgroup_order = lcm(*(residue_field.order_of(x, factors) for x in images))
    return (residue_field.q - 1) // subgroup_order


def count(
    field_spec: QuadraticFieldSpec,
    group: GroupSpec,
    x: int,
    d: int,
    histogram_cap: int = DEFAULT_HISTOGRAM_CAP,
    workers: int = 1,
    convention: ExclusionConvention = ExclusionConvention.EXCLUDE,
    ceiling: int = DEFAULT_COUNT_CEILING,
) -> CountReport:
    """
    Tally ind_p(G) mod d over all prime ideals of norm <= x.

    Primes are processed in fixed blocks whose reports are merged in order,
    so the result does not depend on `workers`.

    Raises:
        PreconditionError: If x < 2, d < 2, x exceeds the ceiling or the group lives elsewhere
    """
    if x < 2:
        raise PreconditionError(f"Norm bound must be at least 2, got {x}")
    if d < 2:
        raise PreconditionError(f"Modulus must be at least 2, got {d}")
    if x > ceiling:
        raise PreconditionError(f"Norm bound {x} exceeds the ceiling {ceiling}")
    if group.field != field_spec:
        raise PreconditionError(f"Group lives in {group.field}, not {field_spec}")

    primes = primes_up_to(x).tolist()
    spf = smallest_factor_table(min(x + 2, SPF_TABLE_CAP))
    blocks = [primes[i : i + BLOCK_PRIMES] for i in range(0, len(primes), BLOCK_PRIMES)]

    def run_block(block: list[int]) -> CountReport:
        report = CountReport(x=x, d=d, histogram_cap=histogram_cap, convention=convention)
        for p in block:
            for record in records_for_prime(field_spec, p, x):
                report.record(index_at_prime(record, group, spf))
        return report

    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(run_block, blocks))
    else:
        partials = [run_block(block) for block in blocks]

    total = CountReport(x=x, d=d, histogram_cap=histogram_cap, convention=convention)
    for partial in partials:
        total = total.merge(partial)
    logger.info(
        f"Counted {total.counted} primes of {field_spec} up to {x} ({total.skipped} skipped)"
    )
    if total.skipped > max(10, total.counted // 100):
        logger.warning(f"{total.skipped} primes skipped: some generator is often a non-unit")
    return total
