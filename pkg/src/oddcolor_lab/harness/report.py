"""Report emission: JSON documents, CSV rows and grid tables."""

from __future__ import annotations

import csv
import json
from collections.abc import Iterable
from pathlib import Path
from typing import Any, TextIO

from tabulate import tabulate

from ..exceptions import InvalidParameterError

CSV_COLUMNS = ("index", "label", "graph6", "n", "m", "mad", "status", "problems", "elapsed_ms")


def dumps(report: dict[str, Any]) -> str:
    """Deterministic JSON text for a report."""
    return json.dumps(report, indent=2, sort_keys=False, default=str)


def write_json(report: dict[str, Any], out: str | None, stream: TextIO) -> None:
    """Write to ``out`` when given, otherwise to ``stream`` (stdout in the CLI)."""
    text = dumps(report) + "\n"
    if out is None:
        stream.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InvalidParameterError("out", f"cannot write {out}: {exc}") from exc


def write_csv(records: Iterable[dict[str, Any]], path: str) -> int:
    """One row per record with the summary columns; returns the row count."""
    rows = 0
    try:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, extrasaction="ignore")
            writer.writeheader()
            for record in records:
                row = dict(record)
                if isinstance(row.get("problems"), list):
                    row["problems"] = ";".join(row["problems"])
                writer.writerow(row)
                rows += 1
    except OSError as exc:
        raise InvalidParameterError("csv", f"cannot write {path}: {exc}") from exc
    return rows


def format_summary_table(report: dict[str, Any]) -> str:
    """Render a campaign summary and its counterexamples as grid tables."""
    summary = report.get("summary", {})
    table = tabulate(
        [[key, value] for key, value in summary.items()],
        headers=[report.get("campaign", "campaign"), "count"],
        tablefmt="grid",
    )
    counterexamples = report.get("counterexamples") or []
    if not counterexamples:
        return table
    rows = [
        [r.get("index"), r.get("graph6"), r.get("mad", ""), ",".join(r.get("problems", []))]
        for r in counterexamples
    ]
    detail = tabulate(rows, headers=["Index", "graph6", "mad", "Problems"], tablefmt="grid")
    return f"{table}\n{detail}"


def format_ledger_table(report: dict[str, Any]) -> str:
    """Per-entity charge table of a discharge report."""
    entities = report.get("ledger", {}).get("entities", [])
    rows = [
        [e["entity"], e["initial"], e["inflow"], e["outflow"], e["final"]] for e in entities
    ]
    table = tabulate(
        rows, headers=["Entity", "Initial", "In", "Out", "Final"], tablefmt="grid"
    )
    verdict = (
        f"bound {report.get('bound')}: {len(report.get('violations', []))} violations, "
        f"{len(report.get('findings', []))} findings"
    )
    return f"{table}\n{verdict}"


def format_query_table(result: dict[str, Any]) -> str:
    """Scalar quantities of a query as a two-column grid."""
    rows = [
        [key, value]
        for key, value in result.items()
        if value is None or isinstance(value, (str, int))
    ]
    return tabulate(rows, headers=["Quantity", "Value"], tablefmt="grid")
