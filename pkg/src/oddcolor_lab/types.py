"""Typed record shapes shared by the harness, the CLI and the tool server."""

from typing import Any, TypedDict


class _ErrorCore(TypedDict):
    code: str
    message: str


class ErrorInfo(_ErrorCore, total=False):
    """Error information structure."""

    details: Any
    line: int


class GraphRecord(TypedDict):
    """One graph of a corpus, as it appears in reports."""

    index: int
    graph6: str
    n: int
    m: int


class QueryResult(TypedDict, total=False):
    graph6: str
    n: int
    m: int
    mad: str
    chi: int | None
    chi_odd: int | None
    chi_pcf: int | None
    girth: int | None
    bad_structure: dict[str, Any] | None
    class_H: dict[str, Any] | None
    findings: list[dict[str, Any]]
    discharge: dict[str, Any]
    girth_corollary: dict[str, Any]
    timeouts: list[str]
    error: ErrorInfo


class CampaignSummary(TypedDict):
    total: int
    checked: int
    skipped: int
    timeouts: int
    errors: int
    counterexamples: int
