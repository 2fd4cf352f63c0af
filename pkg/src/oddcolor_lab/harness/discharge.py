"""Discharge reports: ledger, audit and the detector cross-reference."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..constants import AuditScope, RuleSetId, TheoremContext
from ..discharging import RuleSet, audit, run_rules
from ..exceptions import InvalidParameterError, OddColorLabError
from ..graphs import Graph, PlaneGraph
from ..logging_config import get_logger
from ..structures import detect_reducible
from ..structures.reducible import FIXED_PALETTE
from ..utils import format_error_response, fraction_to_str, parse_fraction
from ..validators import DischargeRequest, validate_request
from .corpus import resolve_source

logger = get_logger(__name__)

CONTEXT_OF_RULES = {
    RuleSetId.ODD4_TWO_NINTHS: TheoremContext.ODD4,
    RuleSetId.PCF_C5: TheoremContext.PCF_C,
    RuleSetId.PCF_C6PLUS: TheoremContext.PCF_C,
    RuleSetId.ODD_APP_B: TheoremContext.ODD_MAD_C,
    RuleSetId.PLANAR_ODD6: TheoremContext.PLANAR_ODD6,
}


def discharge_report(
    source: Graph | PlaneGraph,
    ruleset: RuleSet,
    bound: Fraction | None = None,
    scope: AuditScope = AuditScope.ALL,
    *,
    include_transfers: bool = True,
) -> dict[str, Any]:
    """Run ``ruleset`` and audit it, then cross-check against the matching detectors.

    The paired property holds when the detectors find something or the audit is clean: an
    all-clear from the detectors must come with every final charge at the bound.
    """
    target = ruleset.target if bound is None else bound
    ledger = run_rules(source, ruleset)
    violations = audit(ledger, target, scope)
    context = CONTEXT_OF_RULES[ruleset.id]
    palette = None if context in FIXED_PALETTE else ruleset.c
    findings = detect_reducible(source, context, palette)
    final = ledger.final
    report: dict[str, Any] = {
        "ruleset": ruleset.label,
        "bound": fraction_to_str(target),
        "scope": scope.value,
        "conserved": True,
        "total_initial": fraction_to_str(ledger.total_initial),
        "min_final": fraction_to_str(min(final.values())) if final else None,
        "violations": [v.to_dict() for v in violations],
        "context": context.value,
        "findings": [f.to_dict() for f in findings],
        "paired_property": bool(findings) or not violations,
        "ledger": ledger.to_dict(include_transfers=include_transfers),
    }
    logger.info(
        "discharge %s: %d violations, %d findings",
        ruleset.label,
        len(violations),
        len(findings),
        extra={"ruleset": ruleset.label},
    )
    return report


def _discharge_impl(request: DischargeRequest) -> dict[str, Any]:
    source = resolve_source(
        graph6=request.graph6,
        family=request.family,
        plane=request.plane,
        plane_fixture_name=request.plane_fixture,
    )
    epsilon = None if request.epsilon is None else parse_fraction(request.epsilon, "epsilon")
    ruleset = RuleSet.named(request.rules, request.c, epsilon)
    bound = None if request.bound is None else parse_fraction(request.bound)
    return discharge_report(
        source,
        ruleset,
        bound,
        AuditScope(request.scope),
        include_transfers=request.include_transfers,
    )


def cmd_discharge(data: dict[str, Any]) -> dict[str, Any]:
    """Ledger, audit verdict and detector cross-reference for one graph or plane graph."""
    try:
        request = validate_request(DischargeRequest, data)
    except InvalidParameterError as exc:
        return {"error": format_error_response(exc)}

    try:
        return _discharge_impl(request)
    except OddColorLabError as exc:
        logger.error("discharge failed: %s", exc.message)
        return {"error": format_error_response(exc)}
    except Exception as exc:  # pragma: no cover
        logger.exception("Unexpected error while discharging")
        return {"error": format_error_response(exc)}
