"""Validation rules and reports."""

from indexdens.validation.report import ValidationIssue, ValidationReport, ValidationSeverity
from indexdens.validation.rules import ModelRules, ModelRulesBuilder

__all__ = [
    "ModelRules",
    "ModelRulesBuilder",
    "ValidationReport",
    "ValidationIssue",
    "ValidationSeverity",
]
