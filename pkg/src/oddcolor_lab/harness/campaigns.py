"""Theorem-verification campaigns over graph corpora and seeded lemma instances."""

from __future__ import annotations

import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..coloring import solve, verify
from ..coloring.instances import MIN_PALETTE, admissible_instances
from ..config import get_config
from ..constants import (
    ODD4_MAD_BOUND,
    AuditScope,
    ColorMode,
    LemmaKind,
    TheoremContext,
    TheoremId,
)
from ..density import mad_at_most, mad_exact
from ..discharging import RuleSet, audit, run_rules
from ..exceptions import (
    InconsistencyAlarm,
    InvalidParameterError,
    OddColorLabError,
    SolverTimeout,
)
from ..graphs import hypothesis_planar_odd6, small_cycle_adjacencies, write_graph6
from ..logging_config import get_logger, log_performance
from ..structures import (
    detect_reducible,
    find_bad_structure,
    in_class_H,
    validate_bad_structure,
    validate_class_H,
)
from ..types import CampaignSummary
from ..utils import format_error_response, fraction_to_str
from ..validators import VerifyRequest, validate_request
from .corpus import ALL_PLANE_FIXTURES, CorpusItem, load_corpus

logger = get_logger(__name__)

CONSISTENT = "consistent"
COUNTEREXAMPLE = "counterexample"
TIMEOUT = "timeout"
ERROR = "error"

# planar graphs above this order are filtered out before the odd 6-coloring search
PLANAR_SEARCH_LIMIT = 30

DEFAULT_CORPUS = {
    TheoremId.ODD4: ["enum:7"],
    TheoremId.PCF: ["enum:7"],
    TheoremId.ODD_MAD: ["enum:7"],
    TheoremId.PLANAR6: [ALL_PLANE_FIXTURES],
}

LEMMA_KINDS = {
    TheoremId.LEMMA_PCF: LemmaKind.PCF,
    TheoremId.LEMMA_PCF3: LemmaKind.PCF3,
    TheoremId.LEMMA_ODD: LemmaKind.ODD,
}

_TOTAL_MODE = {
    LemmaKind.PCF: ColorMode.PCF,
    LemmaKind.PCF3: ColorMode.PCF,
    LemmaKind.ODD: ColorMode.ODD,
}


@dataclass
class CampaignReport:
    """Per-graph records of a campaign plus its summary; empty counterexamples means it held."""

    campaign: str
    params: dict[str, Any]
    records: list[dict[str, Any]] = field(default_factory=list)
    skipped: int = 0

    @property
    def counterexamples(self) -> list[dict[str, Any]]:
        return [r for r in self.records if r["status"] == COUNTEREXAMPLE]

    @property
    def summary(self) -> CampaignSummary:
        statuses = [r["status"] for r in self.records]
        return {
            "total": len(statuses) + self.skipped,
            "checked": statuses.count(CONSISTENT) + statuses.count(COUNTEREXAMPLE),
            "skipped": self.skipped,
            "timeouts": statuses.count(TIMEOUT),
            "errors": statuses.count(ERROR),
            "counterexamples": statuses.count(COUNTEREXAMPLE),
        }

    @property
    def ok(self) -> bool:
        summary = self.summary
        return summary["counterexamples"] == 0 and summary["errors"] == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "campaign": self.campaign,
            "params": self.params,
            "summary": dict(self.summary),
            "counterexamples": self.counterexamples,
            "records": self.records,
        }


@dataclass(frozen=True)
class _Task:
    theorem: TheoremId
    c: int
    budget_ms: int
    item: CorpusItem


def _verdict(record: dict[str, Any], problems: list[str]) -> dict[str, Any]:
    record["status"] = COUNTEREXAMPLE if problems else CONSISTENT
    if problems:
        record["problems"] = problems
    return record


def _paired_discharge(
    source: Any, ruleset: RuleSet, context: TheoremContext, c: int | None
) -> tuple[int, int]:
    """Detector findings and audit violations at the rule set's own target."""
    findings = detect_reducible(source, context, c)
    violations = audit(run_rules(source, ruleset), ruleset.target, AuditScope.ALL)
    return len(findings), len(violations)


def _check_odd4(task: _Task) -> dict[str, Any] | None:
    graph = task.item.graph
    if graph.m == 0 or not graph.is_connected() or not mad_at_most(graph, ODD4_MAD_BOUND):
        return None
    record = task.item.to_dict()
    record["mad"] = fraction_to_str(mad_exact(graph))
    witness = in_class_H(graph)
    coloring = solve(graph, 4, ColorMode.ODD, budget_ms=task.budget_ms)
    record["class_H"] = None if witness is None else witness.to_dict()
    record["odd4_coloring"] = None if coloring is None else list(coloring.assignment)
    problems = []
    if (witness is None) != (coloring is not None):
        problems.append("biconditional")
    if witness is not None and not validate_class_H(graph, witness):
        problems.append("class-H-witness")
    if coloring is not None and not verify(graph, coloring, ColorMode.ODD).ok:
        problems.append("coloring-witness")
    if witness is None:
        findings, violations = _paired_discharge(graph, RuleSet.odd4(), TheoremContext.ODD4, None)
        record["findings"], record["violations"] = findings, violations
        if not findings and violations:
            problems.append("discharge")
    return _verdict(record, problems)


def _check_mad_c(task: _Task, mode: ColorMode) -> dict[str, Any] | None:
    """PCF and odd-mad theorems: under mad <= 4c/(c+2), a bad structure iff no c-coloring."""
    graph, c = task.item.graph, task.c
    if graph.m == 0 or not mad_at_most(graph, Fraction(4 * c, c + 2)):
        return None
    record = task.item.to_dict()
    record["mad"] = fraction_to_str(mad_exact(graph))
    problems = []
    bad = find_bad_structure(graph, c)
    if bad is not None:
        # a bad structure settles non-colorability; only its witness is re-checked
        record["bad_structure"] = bad.to_dict()
        record["colorable"] = False
        record["shortcut"] = True
        if not validate_bad_structure(graph, bad, c):
            problems.append("bad-structure-witness")
        return _verdict(record, problems)
    coloring = solve(graph, c, mode, budget_ms=task.budget_ms)
    record["bad_structure"] = None
    record["colorable"] = coloring is not None
    record["coloring"] = None if coloring is None else list(coloring.assignment)
    if coloring is None:
        problems.append("biconditional")
    elif not verify(graph, coloring, mode).ok:
        problems.append("coloring-witness")
    if min(graph.degrees) >= 1:
        if mode is ColorMode.PCF:
            ruleset = RuleSet.pcf_c5() if c == 5 else RuleSet.pcf_c6plus(c)
            context = TheoremContext.PCF_C
        else:
            ruleset, context = RuleSet.odd_app_b(c), TheoremContext.ODD_MAD_C
        findings, violations = _paired_discharge(graph, ruleset, context, c)
        record["findings"], record["violations"] = findings, violations
        if not findings and violations:
            problems.append("discharge")
    return _verdict(record, problems)


def _check_planar6(task: _Task) -> dict[str, Any] | None:
    plane = task.item.plane
    if plane is None:
        raise InvalidParameterError("corpus", f"{task.item.label} is not a plane graph")
    graph = plane.graph
    if not hypothesis_planar_odd6(plane) or graph.n > PLANAR_SEARCH_LIMIT:
        return None
    record = task.item.to_dict()
    problems = []
    ledger = run_rules(plane, RuleSet.planar_odd6())
    record["total_initial"] = fraction_to_str(ledger.total_initial)
    if graph.is_connected() and ledger.total_initial != -12:
        problems.append("charge-sum")
    findings = detect_reducible(plane, TheoremContext.PLANAR_ODD6)
    record["findings"] = len(findings)
    if not findings:
        problems.append("detectors-silent")
    counts = small_cycle_adjacencies(graph)
    record["cycle_adjacency"] = {"edge": counts.edge_sharing, "vertex": counts.vertex_sharing}
    coloring = solve(graph, 6, ColorMode.ODD, budget_ms=task.budget_ms)
    record["odd6_coloring"] = None if coloring is None else list(coloring.assignment)
    if coloring is None:
        problems.append("not-odd-6-colorable")
    elif not verify(graph, coloring, ColorMode.ODD).ok:
        problems.append("coloring-witness")
    return _verdict(record, problems)


def _check_item(task: _Task) -> dict[str, Any] | None:
    """Record for one corpus item, or None when the theorem's filter drops it."""
    start = time.perf_counter()
    try:
        if task.theorem is TheoremId.ODD4:
            record = _check_odd4(task)
        elif task.theorem is TheoremId.PCF:
            record = _check_mad_c(task, ColorMode.PCF)
        elif task.theorem is TheoremId.ODD_MAD:
            record = _check_mad_c(task, ColorMode.ODD)
        else:
            record = _check_planar6(task)
    except SolverTimeout as exc:
        logger.warning(
            "solver budget exceeded",
            extra={"index": task.item.index, "graph6": task.item.graph6},
        )
        record = task.item.to_dict()
        record.update(status=TIMEOUT, error=format_error_response(exc))
    except OddColorLabError as exc:
        logger.error("check failed: %s", exc.message, extra={"index": task.item.index})
        record = task.item.to_dict()
        record.update(status=ERROR, error=format_error_response(exc))
    if record is not None:
        record["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return record


def _run_tasks(tasks: Iterable[_Task], jobs: int) -> Iterator[dict[str, Any] | None]:
    """Results in input order, serially or on a process pool."""
    if jobs <= 1:
        yield from map(_check_item, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_check_item, tasks, chunksize=8)


def _palette_for(theorem: TheoremId, c: int | None) -> int:
    if theorem is TheoremId.ODD4:
        return 4
    if theorem is TheoremId.PLANAR6:
        return 6
    if theorem in LEMMA_KINDS:
        minimum = MIN_PALETTE[LEMMA_KINDS[theorem]]
        chosen = minimum if c is None else c
        if chosen < minimum:
            raise InvalidParameterError("c", f"{theorem.value} needs c >= {minimum}, got {chosen}")
        return chosen
    chosen = 5 if c is None else c
    if chosen < 5:
        raise InvalidParameterError("c", f"{theorem.value} needs c >= 5, got {chosen}")
    return chosen


def run_corpus_campaign(
    theorem: TheoremId,
    corpus: Iterable[CorpusItem],
    *,
    c: int | None = None,
    budget_ms: int | None = None,
    jobs: int | None = None,
    params: dict[str, Any] | None = None,
) -> CampaignReport:
    """Check one graph theorem on every corpus item passing its filter."""
    if theorem in LEMMA_KINDS:
        raise InvalidParameterError("theorem", f"{theorem.value} runs on lemma instances")
    config = get_config()
    palette = _palette_for(theorem, c)
    budget = budget_ms if budget_ms is not None else config.budget_ms
    workers = jobs if jobs is not None else config.jobs
    report = CampaignReport(
        campaign=theorem.value,
        params={"c": palette, "budget_ms": budget, "jobs": workers, **(params or {})},
    )
    tasks = (_Task(theorem, palette, budget, item) for item in corpus)
    for record in _run_tasks(tasks, workers):
        if record is None:
            report.skipped += 1
        else:
            report.records.append(record)
    logger.info(
        "campaign finished: %s",
        report.summary,
        extra={"campaign": theorem.value},
    )
    return report


def run_lemma_campaign(
    theorem: TheoremId,
    *,
    c: int | None = None,
    count: int = 100,
    seed: int | None = None,
    budget_ms: int | None = None,
) -> CampaignReport:
    """Run the extension of a lemma on seeded admissible instances; alarms are counterexamples."""
    kind = LEMMA_KINDS.get(theorem)
    if kind is None:
        raise InvalidParameterError("theorem", f"{theorem.value} is not a lemma campaign")
    config = get_config()
    palette = _palette_for(theorem, c)
    start_seed = seed if seed is not None else config.seed
    budget = budget_ms if budget_ms is not None else config.budget_ms
    report = CampaignReport(
        campaign=theorem.value,
        params={"c": palette, "count": count, "seed": start_seed, "budget_ms": budget},
    )
    instances = admissible_instances(kind, palette, count, start_seed, budget_ms=budget)
    for index, instance in enumerate(instances):
        record: dict[str, Any] = {
            "index": index,
            "graph6": write_graph6(instance.graph),
            "n": instance.graph.n,
            "m": instance.graph.m,
            "vertex": instance.vertex,
        }
        try:
            result = instance.extend()
        except InconsistencyAlarm as exc:
            record.update(
                status=COUNTEREXAMPLE, problems=["alarm"], error=format_error_response(exc)
            )
            report.records.append(record)
            continue
        verdict = verify(instance.graph, result.coloring, _TOTAL_MODE[kind])
        record["coloring"] = list(result.coloring.assignment)
        record["max_slack"] = result.max_slack
        report.records.append(_verdict(record, [] if verdict.ok else ["verdict"]))
    if len(report.records) < count:
        logger.warning(
            "only %d of %d admissible instances were generated",
            len(report.records),
            count,
            extra={"campaign": theorem.value},
        )
    return report


@log_performance(logger, "verify_theorem")
def _verify_impl(request: VerifyRequest) -> CampaignReport:
    theorem = TheoremId(request.theorem)
    if theorem in LEMMA_KINDS:
        return run_lemma_campaign(
            theorem,
            c=request.c,
            count=request.count,
            seed=request.seed,
            budget_ms=request.budget_ms,
        )
    corpus_specs = request.corpus or DEFAULT_CORPUS[theorem]
    corpus = load_corpus(corpus_specs, max_n=request.max_n)
    return run_corpus_campaign(
        theorem,
        corpus,
        c=request.c,
        budget_ms=request.budget_ms,
        jobs=request.jobs,
        params={"corpus": list(corpus_specs)},
    )


def verify_theorem(data: dict[str, Any]) -> CampaignReport | dict[str, Any]:
    """Campaign report, or an ``{"error": ...}`` record when the request or corpus fails."""
    try:
        request = validate_request(VerifyRequest, data)
    except InvalidParameterError as exc:
        return {"error": format_error_response(exc)}

    try:
        return _verify_impl(request)
    except OddColorLabError as exc:
        logger.error("campaign failed: %s", exc.message)
        return {"error": format_error_response(exc)}
    except Exception as exc:  # pragma: no cover
        logger.exception("Unexpected error while running a campaign")
        return {"error": format_error_response(exc)}


def cmd_verify_theorem(data: dict[str, Any]) -> dict[str, Any]:
    """JSON-ready campaign report."""
    result = verify_theorem(data)
    return result.to_dict() if isinstance(result, CampaignReport) else result

