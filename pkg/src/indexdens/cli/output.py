"""
Output records and their renderings.

Every value leaves the program as a decimal string cut to the digits its
radius guarantees, next to the radius itself. Three renderings are
available: an aligned table, JSON records and CSV.
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional, Union

import mpmath
import pandas as pd
from mpmath import mpf

from indexdens.core.types import OutputFormat
from indexdens.core.values import BigComplexValue, BigRealValue, format_fixed, guaranteed_places
from indexdens.validation.report import ValidationReport

logger = logging.getLogger(__name__)


def format_radius(radius: mpf) -> str:
    if radius == 0:
        return "0"
    return mpmath.nstr(radius, 3)


def render_real(value: BigRealValue, digits: int) -> str:
    """
    The midpoint rounded to the places guaranteed by the radius, at most `digits`.

    Example:
        >>> render_real(BigRealValue.from_number(Fraction(19, 20), 192), 4)
        '0.9500'
    """
    places = guaranteed_places(value.radius, digits)
    if places < digits:
        logger.warning(
            f"Only {places} of {digits} requested digits are guaranteed "
            f"(radius {format_radius(value.radius)}); output truncated"
        )
    return format_fixed(value.value, places)


def render_complex(value: BigComplexValue, digits: int) -> str:
    """'x + yi' with both parts cut to the same guaranteed places."""
    real = render_real(value.real, digits)
    imag = render_real(value.imag, digits)
    if imag.startswith("-"):
        return f"{real} - {imag[1:]}i"
    return f"{real} + {imag}i"


@dataclass
class OutputRecord:
    """
    Result of one command.

    Attributes:
        command: Command name as typed
        inputs: Arguments echoed back, as strings
        values: Named results as decimal strings
        radii: Error radius per value name ("0" for exact values)
        model: Provenance of the degree model, when one was used
        notes: Free-form remarks
        elapsed: Wall time in seconds, as a decimal string
    """

    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    values: dict[str, str] = field(default_factory=dict)
    radii: dict[str, str] = field(default_factory=dict)
    model: Optional[str] = None
    notes: list[str] = field(default_factory=list)
    elapsed: str = "0"

    def add_input(self, name: str, value: Any) -> None:
        self.inputs[name] = str(value)

    def add_value(
        self,
        name: str,
        value: Union[BigRealValue, BigComplexValue, Fraction, int, str],
        digits: int,
        real: bool = False,
    ) -> None:
        """
        Store a value under `name`.

        Balls are rendered with their radius; rationals and integers are exact.
        A complex ball is rendered as its real part when `real` is set.
        """
        if isinstance(value, BigComplexValue):
            text = render_real(value.real, digits) if real else render_complex(value, digits)
            radius = format_radius(value.radius)
        elif isinstance(value, BigRealValue):
            text = render_real(value, digits)
            radius = format_radius(value.radius)
        else:
            text = str(value)
            radius = "0"
        self.values[name] = text
        self.radii[name] = radius

    def set_elapsed(self, seconds: float) -> None:
        self.elapsed = f"{seconds:.3f}"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "OutputRecord":
        return cls(
            command=data["command"],
            inputs=dict(data.get("inputs", {})),
            values=dict(data.get("values", {})),
            radii=dict(data.get("radii", {})),
            model=data.get("model"),
            notes=list(data.get("notes", [])),
            elapsed=data.get("elapsed", "0"),
        )

    def to_frame(self) -> pd.DataFrame:
        """One row per value: name, value, radius."""
        return pd.DataFrame(
            {
                "name": list(self.values),
                "value": list(self.values.values()),
                "radius": [self.radii.get(name, "") for name in self.values],
            },
            dtype=str,
        )


def render(record: OutputRecord, fmt: OutputFormat) -> str:
    """Render a record in the requested format."""
    if fmt == OutputFormat.RECORDS:
        return json.dumps(record.to_dict(), indent=2)
    frame = record.to_frame()
    if fmt == OutputFormat.CSV:
        return frame.to_csv(index=False).rstrip("\n")

    header = [f"{record.command} " + " ".join(f"{k}={v}" for k, v in record.inputs.items())]
    if record.model:
        header.append(f"model: {record.model}")
    body = frame.to_string(index=False) if len(frame) else "(no values)"
    footer = [f"note: {note}" for note in record.notes]
    footer.append(f"elapsed: {record.elapsed}s")
    return "\n".join(header + [body] + footer)


def render_report(report: ValidationReport, fmt: OutputFormat) -> str:
    """Render a verification report in the requested format."""
    if fmt == OutputFormat.RECORDS:
        return json.dumps(report.to_dict(), indent=2)
    if fmt == OutputFormat.CSV:
        frame = pd.DataFrame([issue.to_dict() for issue in report.issues])
        return frame.to_csv(index=False).rstrip("\n")
    return str(report)
