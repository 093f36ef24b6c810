"""
Validation report for degree models and acceptance checks.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional


class ValidationSeverity(str, Enum):
    """Severity levels for validation issues."""

    ERROR = "ERROR"
    WARNING = "WARNING"
    INFO = "INFO"


@dataclass
class ValidationIssue:
    """
    A single validation finding.

    Attributes:
        field: The quantity or component the finding is about
        message: Description of the finding
        severity: Severity level
        current_value: The value that was observed
        expected: What was expected
        suggestion: How to fix the issue
    """

    field: str
    message: str
    severity: ValidationSeverity = ValidationSeverity.ERROR
    current_value: Optional[Any] = None
    expected: Optional[str] = None
    suggestion: Optional[str] = None

    def __str__(self) -> str:
        parts = [f"{self.severity.value}: {self.field} - {self.message}"]
        if self.current_value is not None:
            parts.append(f"  Current: {self.current_value}")
        if self.expected:
            parts.append(f"  Expected: {self.expected}")
        if self.suggestion:
            parts.append(f"  Suggestion: {self.suggestion}")
        return "\n".join(parts)

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "message": self.message,
            "severity": self.severity.value,
            "current_value": None if self.current_value is None else str(self.current_value),
            "expected": self.expected,
            "suggestion": self.suggestion,
        }


@dataclass
class ValidationReport:
    """
    Report containing validation results.

    Attributes:
        issues: Findings in the order they were added

    Example:
        >>> report = model.validate()
        >>> if not report.is_valid:
        ...     for issue in report.errors:
        ...         print(issue)
    """

    issues: list[ValidationIssue] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        """Check if there are no errors (warnings are ok)."""
        return not any(i.severity == ValidationSeverity.ERROR for i in self.issues)

    @property
    def has_warnings(self) -> bool:
        return any(i.severity == ValidationSeverity.WARNING for i in self.issues)

    @property
    def errors(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == ValidationSeverity.ERROR]

    @property
    def warnings(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == ValidationSeverity.WARNING]

    @property
    def infos(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == ValidationSeverity.INFO]

    @property
    def error_count(self) -> int:
        return len(self.errors)

    @property
    def warning_count(self) -> int:
        return len(self.warnings)

    def add_error(
        self,
        field: str,
        message: str,
        current_value: Optional[Any] = None,
        expected: Optional[str] = None,
        suggestion: Optional[str] = None,
    ) -> None:
        """Add an error to the report."""
        self.issues.append(
            ValidationIssue(
                field=field,
                message=message,
                severity=ValidationSeverity.ERROR,
                current_value=current_value,
                expected=expected,
                suggestion=suggestion,
            )
        )

    def add_warning(
        self,
        field: str,
        message: str,
        current_value: Optional[Any] = None,
        expected: Optional[str] = None,
        suggestion: Optional[str] = None,
    ) -> None:
        """Add a warning to the report."""
        self.issues.append(
            ValidationIssue(
                field=field,
                message=message,
                severity=ValidationSeverity.WARNING,
                current_value=current_value,
                expected=expected,
                suggestion=suggestion,
            )
        )

    def add_info(
        self,
        field: str,
        message: str,
        current_value: Optional[Any] = None,
        expected: Optional[str] = None,
    ) -> None:
        """Add an info message to the report."""
        self.issues.append(
            ValidationIssue(
                field=field,
                message=message,
                severity=ValidationSeverity.INFO,
                current_value=current_value,
                expected=expected,
            )
        )

    def merge(self, other: "ValidationReport") -> None:
        """Merge another report into this one."""
        self.issues.extend(other.issues)

    def to_dict(self) -> dict:
        return {
            "is_valid": self.is_valid,
            "issues": [issue.to_dict() for issue in self.issues],
        }

    def __str__(self) -> str:
        if not self.issues:
            return "Validation passed: No issues found"

        if not self.is_valid:
            headline = "Validation failed:"
        elif self.has_warnings:
            headline = "Validation passed with warnings:"
        else:
            headline = "Validation passed:"
        lines = [headline, f"  {self.error_count} error(s), {self.warning_count} warning(s)", ""]

        for issue in self.issues:
            lines.append(str(issue))
            lines.append("")

        return "\n".join(lines)

    def __bool__(self) -> bool:
        """Boolean conversion returns is_valid."""
        return self.is_valid
