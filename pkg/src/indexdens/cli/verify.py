"""
Acceptance suites checking reference densities and constants for Q(sqrt5) and d = 5.

Each entry becomes an INFO issue when it passes and an ERROR issue when it
does not, so a suite's outcome is the report's is_valid.
"""

import logging
import math
from typing import Optional

from indexdens.characters.group import find_character
from indexdens.constants.bchi import b_chi
from indexdens.core.settings import ComputeSettings
from indexdens.density.engine import dens
from indexdens.density.model import Q_SQRT5_GOLDEN, Q_SQRT5_SECOND, DegreeModel
from indexdens.harness.counting import count
from indexdens.harness.fields import GroupSpec, QuadraticFieldSpec
from indexdens.validation.report import ValidationReport

logger = logging.getLogger(__name__)

TABLE2_TOLERANCE = 1e-13
TABLE1_EMPIRICAL_TOLERANCE = 2e-4
TABLE1_EMPIRICAL_X = 10**6
PARTITION_TOLERANCE = 1e-10

# B_chi(1) for the characters mod 5, selected by their value at the generator 2
TABLE2: tuple[tuple[str, complex], ...] = (
    ("chi(2)=i", complex(0.34645514515465, 0.21283903970350)),
    ("chi(2)=-i", complex(0.34645514515465, -0.21283903970350)),
    ("chi(2)=-1", complex(0.12284254160167, 0.0)),
    ("principal", complex(0.95, 0.0)),
)

# (model, generator, theoretical dens(a, 5) for a = 0..4, observed ratios at x = 10^6)
TABLE1: tuple[tuple[DegreeModel, str, tuple[float, ...], tuple[float, ...]], ...] = (
    (
        Q_SQRT5_GOLDEN,
        "(1+sqrt5)/2",
        (0.100000, 0.418205, 0.296724, 0.0950872, 0.0899840),
        (0.100093, 0.419351, 0.296954, 0.0947177, 0.0888838),
    ),
    (
        Q_SQRT5_SECOND,
        "-(5+sqrt5)/2",
        (0.100000, 0.451872, 0.266393, 0.0995570, 0.0821785),
        (0.099787, 0.450979, 0.267518, 0.0996599, 0.0820564),
    ),
)


def significant_tolerance(expected: float, digits: int = 6) -> float:
    """Half a unit in the last of `digits` significant digits of `expected`."""
    exponent = math.floor(math.log10(abs(expected))) + 1
    return 0.5 * 10.0 ** (exponent - digits) + 1e-12


def _check(
    report: ValidationReport, name: str, observed: complex, expected: complex, tolerance: float
) -> None:
    delta = abs(observed - expected)
    if delta <= tolerance:
        report.add_info(name, f"delta {delta:.3e} within {tolerance:.1e}", observed, str(expected))
    else:
        report.add_error(
            name, f"delta {delta:.3e} exceeds {tolerance:.1e}", observed, str(expected)
        )


def verify_table2(settings: Optional[ComputeSettings] = None) -> ValidationReport:
    """B_chi(1) for all four characters mod 5."""
    settings = settings or ComputeSettings.default()
    report = ValidationReport()
    for selector, expected in TABLE2:
        chi = find_character(5, selector)
        result = b_chi(
            chi,
            1,
            n_terms=settings.n_terms,
            precision=settings.precision,
            exact_cutoff=settings.exact_cutoff,
            workers=settings.workers,
        )
        _check(report, f"B[{selector}](1)", complex(result.value), expected, TABLE2_TOLERANCE)
    return report


def verify_table1(
    settings: Optional[ComputeSettings] = None,
    skip_empirical: bool = False,
    x: int = TABLE1_EMPIRICAL_X,
) -> ValidationReport:
    """
    Theoretical densities dens(a, 5) of both Q(sqrt5) models to six significant
    digits, their partition of unity and, unless skipped, the observed ratios.
    """
    settings = settings or ComputeSettings.default()
    report = ValidationReport()
    field_spec = QuadraticFieldSpec.of(5)
    for model, generator, theory, empirical in TABLE1:
        total = 0.0
        for a, expected in enumerate(theory):
            value = dens(
                a,
                5,
                model,
                precision=settings.precision,
                n_terms=settings.n_terms,
                exact_cutoff=settings.exact_cutoff,
                workers=settings.workers,
            ).density
            total += float(value)
            _check(
                report,
                f"{model.name} dens({a},5)",
                float(value),
                expected,
                significant_tolerance(expected),
            )
        _check(report, f"{model.name} sum of dens(a,5)", total, 1.0, PARTITION_TOLERANCE)

        if skip_empirical:
            continue
        group = GroupSpec.parse(field_spec, [generator])
        counts = count(
            field_spec,
            group,
            x,
            5,
            workers=settings.workers,
            convention=settings.convention,
            ceiling=settings.count_ceiling,
        )
        for a, expected in enumerate(empirical):
            _check(
                report,
                f"{model.name} ratio({a},5) at x={x}",
                float(counts.ratios[a]),
                expected,
                TABLE1_EMPIRICAL_TOLERANCE,
            )
    logger.info(f"table1: {report.error_count} failures in {len(report.issues)} checks")
    return report


SUITES = {"table1": verify_table1, "table2": verify_table2}
