"""Command-line surface: output records, acceptance suites and the dispatcher."""

from indexdens.cli.main import build_parser, main
from indexdens.cli.output import OutputRecord, render, render_complex, render_real, render_report
from indexdens.cli.verify import verify_table1, verify_table2

__all__ = [
    "main",
    "build_parser",
    "OutputRecord",
    "render",
    "render_report",
    "render_real",
    "render_complex",
    "verify_table1",
    "verify_table2",
]
