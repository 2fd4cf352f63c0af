"""Per-graph queries: density, chromatic numbers, class memberships, detectors, discharging."""

from __future__ import annotations

from collections.abc import Callable
from functools import partial
from typing import Any

import networkx as nx

from ..cache import get_result_cache
from ..coloring import chi, solve
from ..config import get_config
from ..constants import ColorMode, RuleSetId, TheoremContext
from ..density import mad_exact
from ..discharging import RuleSet
from ..exceptions import InvalidParameterError, OddColorLabError, SolverTimeout
from ..graphs import Graph, PlaneGraph, girth, to_networkx, write_graph6
from ..logging_config import get_logger
from ..structures import detect_reducible, find_bad_structure, girth_threshold, in_class_H
from ..structures.reducible import FIXED_PALETTE
from ..types import QueryResult
from ..utils import format_error_response, fraction_to_str
from ..validators import QueryRequest, validate_request
from .corpus import resolve_source
from .discharge import discharge_report

logger = get_logger(__name__)

CHROMATIC_MODES = {
    "chi": ColorMode.PROPER,
    "chi_odd": ColorMode.ODD,
    "chi_pcf": ColorMode.PCF,
}

# graphs up to this order get a PCF colorability search in the girth corollary check
GIRTH_COROLLARY_SEARCH_LIMIT = 30


class _Memo:
    def __init__(self, graph6: str, enabled: bool) -> None:
        self.graph6 = graph6
        self.enabled = enabled

    def __call__(self, quantity: str, compute: Callable[[], Any]) -> Any:
        if not self.enabled:
            return compute()
        return get_result_cache().get_or_compute(self.graph6, quantity, compute)


def _girth_corollary(graph: Graph, c: int, budget_ms: int, memo: _Memo) -> dict[str, Any]:
    threshold = girth_threshold(c)
    length = girth(graph)
    meets = length is None or length >= threshold
    planar, _ = nx.check_planarity(to_networkx(graph))
    report: dict[str, Any] = {
        "c": c,
        "threshold": threshold,
        "girth": length,
        "planar": planar,
        "meets_threshold": meets,
        "pcf_colorable": None,
    }
    if planar and meets and graph.n <= GIRTH_COROLLARY_SEARCH_LIMIT:
        search = partial(solve, graph, c, ColorMode.PCF, budget_ms=budget_ms)
        found = memo(f"pcf-colorable:{c}", search)
        report["pcf_colorable"] = found is not None
        report["coloring"] = None if found is None else list(found.assignment)
    report["holds"] = report["pcf_colorable"] is not False
    return report


def _default_context(source: Graph | PlaneGraph) -> TheoremContext:
    return TheoremContext.PLANAR_ODD6 if isinstance(source, PlaneGraph) else TheoremContext.PCF_C


def _default_rules(source: Graph | PlaneGraph) -> str:
    return (
        RuleSetId.PLANAR_ODD6.value if isinstance(source, PlaneGraph) else RuleSetId.PCF_C5.value
    )


def query_graph(
    source: Graph | PlaneGraph,
    quantities: list[str],
    *,
    c: int = 5,
    context: str | None = None,
    rules: str | None = None,
    girth_corollary: int | None = None,
    budget_ms: int | None = None,
) -> QueryResult:
    """Compute the requested quantities of one graph; solver timeouts are listed, not raised."""
    config = get_config()
    graph = source.graph if isinstance(source, PlaneGraph) else source
    graph6 = write_graph6(graph)
    budget = budget_ms if budget_ms is not None else config.budget_ms
    memo = _Memo(graph6, config.cache_results)
    result: QueryResult = {"graph6": graph6, "n": graph.n, "m": graph.m}
    timeouts: list[str] = []

    for quantity in quantities:
        if quantity == "mad":
            result["mad"] = fraction_to_str(memo("mad", partial(mad_exact, graph)))
        elif quantity in CHROMATIC_MODES:
            mode = CHROMATIC_MODES[quantity]
            try:
                value = memo(quantity, partial(chi, graph, mode, budget_ms=budget))
            except SolverTimeout:
                logger.warning("%s search exceeded %d ms", quantity, budget)
                timeouts.append(quantity)
                value = None
            result[quantity] = value  # type: ignore[literal-required]
        elif quantity == "girth":
            result["girth"] = girth(graph)
        elif quantity == "bad_structure":
            witness = find_bad_structure(graph, c)
            result["bad_structure"] = None if witness is None else witness.to_dict()
        elif quantity == "class_H":
            member = in_class_H(graph)
            result["class_H"] = None if member is None else member.to_dict()
        elif quantity == "findings":
            theorem_context = (
                TheoremContext(context) if context is not None else _default_context(source)
            )
            palette = None if theorem_context in FIXED_PALETTE else c
            result["findings"] = [
                f.to_dict() for f in detect_reducible(source, theorem_context, palette)
            ]
        elif quantity == "discharge":
            ruleset = RuleSet.named(rules or _default_rules(source), c)
            report = discharge_report(source, ruleset, include_transfers=False)
            report.pop("ledger")
            result["discharge"] = report
        elif quantity == "girth_corollary":
            try:
                result["girth_corollary"] = _girth_corollary(
                    graph, girth_corollary or c, budget, memo
                )
            except SolverTimeout:
                timeouts.append(quantity)
        else:
            raise InvalidParameterError("quantities", f"unknown quantity {quantity!r}")

    if timeouts:
        result["timeouts"] = timeouts
    return result


def _query_impl(request: QueryRequest) -> QueryResult:
    source = resolve_source(
        graph6=request.graph6,
        family=request.family,
        plane=request.plane,
        plane_fixture_name=request.plane_fixture,
    )
    quantities = list(request.quantities)
    if request.girth_corollary is not None and "girth_corollary" not in quantities:
        quantities.append("girth_corollary")
    return query_graph(
        source,
        quantities,
        c=request.c,
        context=request.context,
        rules=request.rules,
        girth_corollary=request.girth_corollary,
        budget_ms=request.budget_ms,
    )


def cmd_query(data: dict[str, Any]) -> dict[str, Any]:
    """Requested quantities of one graph as a single JSON-ready record."""
    try:
        request = validate_request(QueryRequest, data)
    except InvalidParameterError as exc:
        return {"error": format_error_response(exc)}

    try:
        return dict(_query_impl(request))
    except OddColorLabError as exc:
        logger.error("query failed: %s", exc.message)
        return {"error": format_error_response(exc)}
    except Exception as exc:  # pragma: no cover
        logger.exception("Unexpected error while querying a graph")
        return {"error": format_error_response(exc)}
