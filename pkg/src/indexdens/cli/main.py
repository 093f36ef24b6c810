"""
Command-line entry point.

    indexdens [global flags] <command> [arguments]

Global flags: --digits, --terms, --threads, --format {table,records,csv},
--model <builtin name or JSON file>, -v/-vv.

Commands:
    bchi      B_chi(r) for a character selected by exponents or pinned values
    lvalue    L(s, chi)
    artin     the rank-r Artin constant A_r
    rho       density for a generic rank-1 group
    density   dens(a, d) under a degree model, with coefficients and constants
    coeffs    the coefficients d_chi alone
    count     index statistics over prime ideals of Q or Q(sqrt D)
    verify    the table1 / table2 acceptance suites

Model files are JSON objects:
    {"name": "...", "rank": 1, "n0": 5, "description": "...",
     "corrections": [{"divisor": 5, "C": 2}]}
"""

import argparse
import logging
import sys
import time
from typing import Callable, Optional, Sequence

from indexdens.analytic.lseries import dirichlet_L, dirichlet_L_direct
from indexdens.analytic.primezeta import artin_constant, artin_constant_raw
from indexdens.characters.group import build_character_group, find_character
from indexdens.cli.output import OutputRecord, render, render_report
from indexdens.cli.verify import SUITES
from indexdens.constants.bchi import b_chi
from indexdens.core.errors import IndexDensError
from indexdens.core.settings import DEFAULT_DIGITS, DEFAULT_TERMS, ComputeSettings
from indexdens.core.types import ExclusionConvention, OutputFormat
from indexdens.core.values import BigRealValue
from indexdens.density.engine import DensityRequest, character_coefficient, dens, rho
from indexdens.density.model import DegreeModel, resolve_model
from indexdens.harness.counting import count
from indexdens.harness.fields import GroupSpec, QuadraticFieldSpec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ERROR = 2


def _settings(args: argparse.Namespace) -> ComputeSettings:
    return ComputeSettings.default().with_overrides(
        digits=args.digits,
        n_terms=args.terms,
        workers=args.threads,
        convention=ExclusionConvention(args.convention) if "convention" in args else None,
    )


def _model(args: argparse.Namespace) -> DegreeModel:
    return resolve_model(args.model)


def _describe(record: OutputRecord, model: DegreeModel, describe: bool) -> None:
    record.model = model.label
    if describe:
        record.notes.append(model.description or "(no description)")
        record.notes.append(
            f"rank {model.rank}, n0 {model.n0}, C = "
            + ", ".join(f"C({g})={c}" for g, c in model.corrections)
        )


def cmd_bchi(args: argparse.Namespace, record: OutputRecord) -> int:
    settings = _settings(args)
    chi = find_character(args.modulus, args.character)
    record.add_input("modulus", args.modulus)
    record.add_input("character", chi.label)
    record.add_input("rank", args.rank)
    result = b_chi(
        chi,
        args.rank,
        n_terms=settings.n_terms,
        precision=settings.precision,
        exact_cutoff=settings.exact_cutoff,
        workers=settings.workers,
    )
    if result.exact:
        record.add_value("B", result.rational, settings.digits)
        record.notes.append("principal character: finite product over p | d")
    else:
        record.add_value("B", result.value, settings.digits, real=chi.is_real)
        record.add_value("e_bound", result.e_bound, settings.digits)
    record.add_input("terms", result.n_terms)
    return EXIT_OK


def cmd_lvalue(args: argparse.Namespace, record: OutputRecord) -> int:
    settings = _settings(args)
    chi = find_character(args.modulus, args.character)
    record.add_input("modulus", args.modulus)
    record.add_input("character", chi.label)
    record.add_input("s", args.s)
    value = dirichlet_L(args.s, chi, settings.precision)
    record.add_value("L", value, settings.digits, real=chi.is_real)
    if args.direct:
        direct = dirichlet_L_direct(args.s, chi, args.direct)
        record.add_value(f"L_direct[{args.direct}]", direct, settings.digits, real=chi.is_real)
    return EXIT_OK


def cmd_artin(args: argparse.Namespace, record: OutputRecord) -> int:
    settings = _settings(args)
    record.add_input("rank", args.rank)
    record.add_value("A", artin_constant(args.rank, settings.precision), settings.digits)
    if args.raw:
        raw = artin_constant_raw(args.rank, args.raw)
        record.add_value(f"A_raw[p<={args.raw}]", raw, settings.digits)
    return EXIT_OK


def cmd_rho(args: argparse.Namespace, record: OutputRecord) -> int:
    settings = _settings(args)
    record.add_input("a", args.a)
    record.add_input("d", args.d)
    value = rho(
        args.a,
        args.d,
        precision=settings.precision,
        n_terms=settings.n_terms,
        exact_cutoff=settings.exact_cutoff,
        workers=settings.workers,
    )
    record.add_value("rho", value, settings.digits)
    return EXIT_OK


def cmd_density(args: argparse.Namespace, record: OutputRecord) -> int:
    settings = _settings(args)
    model = _model(args)
    _describe(record, model, args.describe)
    record.add_input("a", args.a)
    record.add_input("d", args.d)
    report = dens(
        args.a,
        args.d,
        model,
        precision=settings.precision,
        n_terms=settings.n_terms,
        exact_cutoff=settings.exact_cutoff,
        workers=settings.workers,
    )
    record.add_value("density", report.density, settings.digits)
    if report.exact is not None:
        record.add_value("density_exact", report.exact, settings.digits)
        return EXIT_OK
    for term in report.terms:
        label = term.character.label
        record.add_value(f"d[{label}]", term.coefficient, settings.digits)
        if term.constant is not None:
            record.add_value(f"B[{label}]", term.constant.value, settings.digits)
    return EXIT_OK


def cmd_coeffs(args: argparse.Namespace, record: OutputRecord) -> int:
    settings = _settings(args)
    model = _model(args)
    _describe(record, model, args.describe)
    request = DensityRequest.of(args.a, args.d)
    record.add_input("a", request.a)
    record.add_input("d", request.d)
    if request.a == 0:
        record.notes.append("a = 0 mod d: the density is exact and has no character expansion")
        return EXIT_OK
    _, characters = build_character_group(request.d_prime)
    for chi in characters:
        coefficient = character_coefficient(chi, request, model, settings.precision)
        record.add_value(f"d[{chi.label}]", coefficient, settings.digits)
    return EXIT_OK


def cmd_count(args: argparse.Namespace, record: OutputRecord) -> int:
    settings = _settings(args)
    field_spec = QuadraticFieldSpec.parse(args.field)
    group = GroupSpec.parse(field_spec, args.generators)
    record.add_input("field", field_spec)
    record.add_input("group", group)
    record.add_input("x", args.x)
    record.add_input("d", args.d)
    record.add_input("convention", settings.convention)
    report = count(
        field_spec,
        group,
        args.x,
        args.d,
        histogram_cap=settings.histogram_cap,
        workers=settings.workers,
        convention=settings.convention,
        ceiling=settings.count_ceiling,
    )
    record.add_value("pi_K", report.pi_K, settings.digits)
    record.add_value("skipped", report.skipped, settings.digits)
    for a, (c, ratio) in enumerate(zip(report.counts, report.ratios)):
        record.add_value(f"count[{a}]", c, settings.digits)
        record.add_value(
            f"ratio[{a}]", BigRealValue.from_number(ratio, settings.precision), settings.digits
        )
    if args.histogram:
        for t, n in report.index_histogram.items():
            record.add_value(f"index[{t}]", n, settings.digits)
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, OutputRecord], int]] = {
    "bchi": cmd_bchi,
    "lvalue": cmd_lvalue,
    "artin": cmd_artin,
    "rho": cmd_rho,
    "density": cmd_density,
    "coeffs": cmd_coeffs,
    "count": cmd_count,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indexdens",
        description="Densities of primes with prescribed multiplicative index modulo d.",
    )
    parser.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="decimal digits")
    parser.add_argument(
        "--terms", type=int, default=DEFAULT_TERMS, help="primes in each B_chi product"
    )
    parser.add_argument("--threads", type=int, default=1, help="worker threads")
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TABLE.value,
    )
    parser.add_argument(
        "--model", default="generic-r1", help="builtin model name or JSON model file"
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bchi", help="B_chi(r)")
    p.add_argument("modulus", type=int)
    p.add_argument("-c", "--character", default="principal", help='e.g. "chi(2)=i" or "[1,0]"')
    p.add_argument("-r", "--rank", type=int, default=1)

    p = sub.add_parser("lvalue", help="L(s, chi)")
    p.add_argument("modulus", type=int)
    p.add_argument("s", type=int)
    p.add_argument("-c", "--character", default="principal")
    p.add_argument("--direct", type=int, default=0, help="also sum the series directly")

    p = sub.add_parser("artin", help="rank-r Artin constant")
    p.add_argument("rank", type=int)
    p.add_argument("--raw", type=int, default=0, help="also truncate the product at this bound")

    p = sub.add_parser("rho", help="density for a generic rank-1 group")
    p.add_argument("a", type=int)
    p.add_argument("d", type=int)

    for name, text in (("density", "dens(a, d) under --model"), ("coeffs", "coefficients d_chi")):
        p = sub.add_parser(name, help=text)
        p.add_argument("a", type=int)
        p.add_argument("d", type=int)
        p.add_argument("--describe", action="store_true", help="print the model provenance")

    p = sub.add_parser("count", help="empirical index counts")
    p.add_argument("field", help='"Q" or a squarefree D > 1')
    p.add_argument("generators", nargs="+", help='e.g. "(1+sqrt5)/2"')
    p.add_argument("--x", type=int, required=True, help="norm bound")
    p.add_argument("-d", type=int, required=True, help="modulus")
    p.add_argument(
        "--convention",
        choices=[c.value for c in ExclusionConvention],
        default=ExclusionConvention.EXCLUDE.value,
    )
    p.add_argument("--histogram", action="store_true", help="include the index histogram")

    p = sub.add_parser("verify", help="acceptance suites")
    p.add_argument("table", choices=sorted(SUITES))
    p.add_argument("--skip-empirical", action="store_true", help="table1: theory rows only")
    p.add_argument("--x", type=int, default=10**6, help="table1: norm bound of the counts")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )


def _run_verify(args: argparse.Namespace, fmt: OutputFormat) -> int:
    settings = _settings(args)
    if args.table == "table1":
        report = SUITES["table1"](settings, skip_empirical=args.skip_empirical, x=args.x)
    else:
        report = SUITES["table2"](settings)
    print(render_report(report, fmt))
    return EXIT_OK if report.is_valid else EXIT_VERIFY_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line; returns the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        _settings(args)
    except ValueError as exc:
        parser.error(str(exc))
    fmt = OutputFormat(args.format)
    try:
        if args.command == "verify":
            return _run_verify(args, fmt)
        record = OutputRecord(command=args.command)
        started = time.perf_counter()
        status = COMMANDS[args.command](args, record)
        record.set_elapsed(time.perf_counter() - started)
    except IndexDensError as exc:
        print(f"indexdens {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(render(record, fmt))
    return status


if __name__ == "__main__":
    sys.exit(main())
