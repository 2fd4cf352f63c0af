"""Charge bookkeeping: initial charges, a transfer log, derived final charges and audits."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

from ..constants import AuditScope
from ..exceptions import InconsistencyAlarm, InvalidParameterError
from ..logging_config import get_logger
from ..utils import fraction_to_str

logger = get_logger(__name__)

EntityKind = Literal["vertex", "face"]


@dataclass(frozen=True, order=True)
class Entity:
    kind: EntityKind
    id: int

    def __str__(self) -> str:
        return f"{self.kind[0]}{self.id}"


def vertex(v: int) -> Entity:
    return Entity("vertex", v)


def face(f: int) -> Entity:
    return Entity("face", f)


@dataclass(frozen=True)
class Transfer:
    source: Entity
    target: Entity
    amount: Fraction
    rule: str
    phase: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "from": str(self.source),
            "to": str(self.target),
            "amount": fraction_to_str(self.amount),
            "rule": self.rule,
            "phase": self.phase,
        }


@dataclass(frozen=True)
class ChargeViolation:
    entity: Entity
    final: Fraction
    bound: Fraction

    def to_dict(self) -> dict[str, Any]:
        return {
            "entity": str(self.entity),
            "final": fraction_to_str(self.final),
            "bound": fraction_to_str(self.bound),
        }


@dataclass
class ChargeLedger:
    """Initial charge per entity plus every transfer made by a rule set.

    Final charges are never stored; they are recomputed from the log so the ledger balances
    by construction and ``check_conservation`` re-sums both sides independently.
    """

    ruleset: str
    initial: dict[Entity, Fraction]
    transfers: list[Transfer] = field(default_factory=list)

    def send(
        self, source: Entity, target: Entity, amount: Fraction, rule: str, phase: str = "vertex"
    ) -> None:
        if amount < 0:
            raise InconsistencyAlarm(
                "discharge", f"rule {rule} produced a negative amount {amount}"
            )
        if amount == 0:
            return
        for entity in (source, target):
            if entity not in self.initial:
                raise InconsistencyAlarm("discharge", f"rule {rule} names unknown entity {entity}")
        self.transfers.append(Transfer(source, target, amount, rule, phase))

    @property
    def final(self) -> dict[Entity, Fraction]:
        charges = dict(self.initial)
        for transfer in self.transfers:
            charges[transfer.source] -= transfer.amount
            charges[transfer.target] += transfer.amount
        return charges

    def entities(self, scope: AuditScope = AuditScope.ALL) -> list[Entity]:
        if scope is AuditScope.VERTICES:
            return sorted(e for e in self.initial if e.kind == "vertex")
        if scope is AuditScope.FACES:
            return sorted(e for e in self.initial if e.kind == "face")
        return sorted(self.initial)

    @property
    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def flows(self) -> tuple[dict[Entity, Fraction], dict[Entity, Fraction]]:
        inflow: dict[Entity, Fraction] = defaultdict(Fraction)
        outflow: dict[Entity, Fraction] = defaultdict(Fraction)
        for transfer in self.transfers:
            outflow[transfer.source] += transfer.amount
            inflow[transfer.target] += transfer.amount
        return inflow, outflow

    def check_conservation(self) -> None:
        """Raise InconsistencyAlarm unless inflow equals outflow and totals agree."""
        inflow, outflow = self.flows()
        moved_in = sum(inflow.values(), Fraction(0))
        moved_out = sum(outflow.values(), Fraction(0))
        if moved_in != moved_out or self.total_final != self.total_initial:
            raise InconsistencyAlarm(
                "discharge",
                "charge is not conserved",
                details={
                    "initial": fraction_to_str(self.total_initial),
                    "final": fraction_to_str(self.total_final),
                },
            )

    def to_dict(self, include_transfers: bool = True) -> dict[str, Any]:
        final = self.final
        inflow, outflow = self.flows()
        result: dict[str, Any] = {
            "ruleset": self.ruleset,
            "total_initial": fraction_to_str(self.total_initial),
            "total_final": fraction_to_str(self.total_final),
            "entities": [
                {
                    "entity": str(e),
                    "initial": fraction_to_str(self.initial[e]),
                    "inflow": fraction_to_str(inflow.get(e, Fraction(0))),
                    "outflow": fraction_to_str(outflow.get(e, Fraction(0))),
                    "final": fraction_to_str(final[e]),
                }
                for e in self.entities()
            ],
        }
        if include_transfers:
            result["transfers"] = [t.to_dict() for t in self.transfers]
        return result


def audit(
    ledger: ChargeLedger, bound: Fraction, scope: AuditScope = AuditScope.ALL
) -> list[ChargeViolation]:
    """Entities in scope whose final charge is below ``bound``."""
    if not isinstance(scope, AuditScope):
        raise InvalidParameterError("scope", f"unknown audit scope {scope!r}")
    final = ledger.final
    violations = [
        ChargeViolation(entity, final[entity], bound)
        for entity in ledger.entities(scope)
        if final[entity] < bound
    ]
    logger.debug(
        "audit %s bound=%s scope=%s: %d violations",
        ledger.ruleset,
        bound,
        scope.value,
        len(violations),
    )
    return violations
