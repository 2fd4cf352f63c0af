"""Main entry point for oddcolor-lab."""

import argparse
import asyncio
import sys
from collections.abc import Callable
from typing import Any

from . import __version__
from .config import get_config, set_config
from .constants import AuditScope, RuleSetId, TheoremContext, TheoremId
from .exceptions import OddColorLabError
from .harness import cmd_discharge, cmd_generate, cmd_query, cmd_verify_theorem
from .harness.corpus import PLANE_FILE_PREFIX, STDIN
from .harness.report import (
    format_ledger_table,
    format_query_table,
    format_summary_table,
    write_csv,
    write_json,
)
from .logging_config import get_logger, resolve_log_level, setup_logging
from .utils import format_error_response

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _add_source_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", help="Graph in graph6 format")
    group.add_argument("--family", help="Family spec, e.g. sk:6, ht:1,1,3, rand:10:22/9:42")
    group.add_argument("--plane", metavar="FILE", help="Planegraph (.pg) file")
    group.add_argument("--plane-fixture", metavar="NAME", help="Built-in plane fixture")
    group.add_argument(
        "--stdin", action="store_true", help="Read graph6 lines from stdin, one record each"
    )


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget-ms", type=int, help="Solver time budget per search")
    parser.add_argument("--seed", type=int, help="Seed for randomized generators")
    parser.add_argument("--jobs", type=int, help="Worker processes for campaigns")
    parser.add_argument("--max-n", type=int, help="Largest vertex count to enumerate")


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", metavar="FILE", help="Write the JSON report to FILE")
    parser.add_argument(
        "--table", action="store_true", help="Print a grid summary to stderr as well"
    )


def _source_payload(args: argparse.Namespace) -> dict[str, Any]:
    return {
        key: value
        for key, value in (
            ("graph6", args.graph6),
            ("family", args.family),
            ("plane", args.plane),
            ("plane_fixture", args.plane_fixture),
        )
        if value is not None
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddcolor-lab",
        description="Odd and proper conflict-free coloring lab: queries, discharging audits "
        "and theorem-verification campaigns",
    )
    parser.add_argument("--version", action="version", version=f"oddcolor-lab {__version__}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase logging verbosity (use -vv for DEBUG)",
    )
    parser.add_argument(
        "-q",
        "--quiet",
        action="count",
        default=0,
        help="Reduce logging verbosity (use -qq for CRITICAL)",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Explicit log level override",
    )
    parser.add_argument(
        "--json-logs",
        action="store_true",
        help="Emit logs as JSON (useful for structured log ingestion)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    query = commands.add_parser("query", help="Compute quantities of one graph")
    _add_source_options(query)
    query.add_argument("--mad", action="store_true", help="Exact maximum average degree")
    query.add_argument("--chi", action="store_true", help="Chromatic number")
    query.add_argument("--chi-odd", action="store_true", help="Odd chromatic number")
    query.add_argument("--chi-pcf", action="store_true", help="PCF chromatic number")
    query.add_argument("--girth", action="store_true", help="Girth")
    query.add_argument(
        "--classes", action="store_true", help="Bad-structure and class-H membership"
    )
    query.add_argument(
        "--findings",
        nargs="?",
        const="",
        choices=["", *(ctx.value for ctx in TheoremContext)],
        metavar="CONTEXT",
        help="Reducible-configuration findings (context defaults by input kind)",
    )
    query.add_argument(
        "--discharge",
        nargs="?",
        const="",
        choices=["", *(r.value for r in RuleSetId)],
        metavar="RULES",
        help="Discharge summary (rule set defaults by input kind)",
    )
    query.add_argument(
        "--girth-corollary", type=int, metavar="C", help="Girth threshold check for palette C"
    )
    query.add_argument("--c", type=int, default=5, help="Palette size (default 5)")
    _add_run_options(query)
    _add_output_options(query)

    verify = commands.add_parser("verify", help="Run a verification campaign")
    verify.add_argument(
        "--theorem", required=True, choices=[t.value for t in TheoremId], help="Campaign id"
    )
    verify.add_argument(
        "--corpus",
        action="append",
        metavar="SPEC",
        help="Corpus spec (repeatable): enum:<n>, plane:all, file:<path>, or a family",
    )
    verify.add_argument("--family", action="append", help="Family spec added to the corpus")
    verify.add_argument("--plane", action="append", metavar="FILE", help="Planegraph file")
    verify.add_argument("--stdin", action="store_true", help="Add graph6 lines from stdin")
    verify.add_argument("--c", type=int, help="Palette size")
    verify.add_argument("--count", type=int, default=100, help="Lemma instances (default 100)")
    verify.add_argument("--csv", metavar="FILE", help="Write one CSV row per record")
    _add_run_options(verify)
    _add_output_options(verify)

    discharge = commands.add_parser("discharge", help="Run and audit a discharging rule set")
    _add_source_options(discharge)
    discharge.add_argument("--rules", required=True, choices=[r.value for r in RuleSetId])
    discharge.add_argument("--c", type=int, help="Palette size for pcf6plus and oddb")
    discharge.add_argument("--epsilon", help="Rational epsilon for oddb")
    discharge.add_argument("--bound", help="Audit bound p/q (defaults to the rule set target)")
    discharge.add_argument(
        "--scope", default=AuditScope.ALL.value, choices=[s.value for s in AuditScope]
    )
    discharge.add_argument(
        "--no-transfers", action="store_true", help="Omit the transfer log from the report"
    )
    _add_run_options(discharge)
    _add_output_options(discharge)

    gen = commands.add_parser("gen", help="Build a family member")
    gen.add_argument("family", help="Family spec")
    gen.add_argument("--format", default="graph6", choices=["graph6", "planegraph", "json"])
    gen.add_argument("--out", metavar="FILE", help="Write to FILE instead of stdout")

    commands.add_parser("serve", help="Run the MCP stdio server")
    return parser


def _emit(report: dict[str, Any], args: argparse.Namespace) -> None:
    write_json(report, args.out, sys.stdout)


def _query_quantities(args: argparse.Namespace) -> list[str] | None:
    chosen = [
        name
        for name, flag in (
            ("mad", args.mad),
            ("chi", args.chi),
            ("chi_odd", args.chi_odd),
            ("chi_pcf", args.chi_pcf),
            ("girth", args.girth),
        )
        if flag
    ]
    if args.classes:
        chosen += ["bad_structure", "class_H"]
    if args.findings is not None:
        chosen.append("findings")
    if args.discharge is not None:
        chosen.append("discharge")
    if args.girth_corollary is not None:
        chosen.append("girth_corollary")
    return chosen or None


def _run_query(args: argparse.Namespace) -> int:
    payload: dict[str, Any] = {"c": args.c, "budget_ms": args.budget_ms}
    quantities = _query_quantities(args)
    if quantities is not None:
        payload["quantities"] = quantities
    if args.findings:
        payload["context"] = args.findings
    if args.discharge:
        payload["rules"] = args.discharge
    if args.girth_corollary is not None:
        payload["girth_corollary"] = args.girth_corollary

    if args.stdin:
        lines = [line.strip() for line in sys.stdin if line.strip() and not line.startswith("#")]
        records = [cmd_query({**payload, "graph6": line}) for line in lines]
        _emit({"records": records}, args)
        if args.table:
            for record in records:
                print(format_query_table(record), file=sys.stderr)
        return EXIT_ERROR if any("error" in r for r in records) else EXIT_OK

    result = cmd_query({**payload, **_source_payload(args)})
    _emit(result, args)
    if args.table and "error" not in result:
        print(format_query_table(result), file=sys.stderr)
    return EXIT_ERROR if "error" in result else EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    corpus = list(args.corpus or [])
    corpus += args.family or []
    corpus += [f"{PLANE_FILE_PREFIX}{path}" for path in args.plane or []]
    if args.stdin:
        corpus.append(STDIN)
    payload: dict[str, Any] = {
        "theorem": args.theorem,
        "corpus": corpus or None,
        "c": args.c,
        "count": args.count,
        "seed": args.seed,
        "jobs": args.jobs,
        "budget_ms": args.budget_ms,
        "max_n": args.max_n,
    }
    report = cmd_verify_theorem(payload)
    _emit(report, args)
    if "error" in report:
        return EXIT_ERROR
    if args.csv:
        write_csv(report["records"], args.csv)
    if args.table:
        print(format_summary_table(report), file=sys.stderr)
    summary = report["summary"]
    if summary["errors"]:
        return EXIT_ERROR
    return EXIT_FAILED if summary["counterexamples"] else EXIT_OK


def _run_discharge(args: argparse.Namespace) -> int:
    if args.stdin:
        print("discharge reads one graph; use --graph6 or --family", file=sys.stderr)
        return EXIT_ERROR
    payload: dict[str, Any] = {
        **_source_payload(args),
        "rules": args.rules,
        "c": args.c,
        "epsilon": args.epsilon,
        "bound": args.bound,
        "scope": args.scope,
        "include_transfers": not args.no_transfers,
    }
    report = cmd_discharge(payload)
    _emit(report, args)
    if "error" in report:
        return EXIT_ERROR
    if args.table:
        print(format_ledger_table(report), file=sys.stderr)
    return EXIT_FAILED if report["violations"] else EXIT_OK


def _run_gen(args: argparse.Namespace) -> int:
    result = cmd_generate({"family": args.family, "format": args.format})
    if "error" in result or args.format == "json":
        _emit(result, args)
        return EXIT_ERROR if "error" in result else EXIT_OK
    text = result["planegraph"] if args.format == "planegraph" else result["graph6"] + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _run_serve(args: argparse.Namespace) -> int:
    from .server import main as server_main

    try:
        asyncio.run(server_main())
    except KeyboardInterrupt:
        print("\nServer stopped by user", file=sys.stderr)
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "query": _run_query,
    "verify": _run_verify,
    "discharge": _run_discharge,
    "gen": _run_gen,
    "serve": _run_serve,
}


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv`` and run one subcommand; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = get_config().with_overrides(
            budget_ms=getattr(args, "budget_ms", None),
            seed=getattr(args, "seed", None),
            jobs=getattr(args, "jobs", None),
            max_enum_vertices=getattr(args, "max_n", None),
        )
        set_config(config)
    except OddColorLabError as exc:
        print(f"Configuration error: {exc.message}", file=sys.stderr)
        return EXIT_ERROR

    level = resolve_log_level(
        default_level=config.log_level,
        explicit_level=args.log_level,
        verbose=args.verbose,
        quiet=args.quiet,
    )
    setup_logging(level=level, format_json=args.json_logs)

    try:
        return COMMANDS[args.command](args)
    except OddColorLabError as exc:
        write_json({"error": format_error_response(exc)}, None, sys.stdout)
        return EXIT_ERROR
    except Exception as exc:
        logger.exception("Unhandled error in %s", args.command)
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    """Console script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
