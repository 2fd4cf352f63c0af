"""Verdicts for proper, odd, PCF and semi colorings."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any, NamedTuple

from ..constants import ColorMode
from ..exceptions import ColoringError
from ..graphs import Graph
from .partial import PartialColoring, neighbor_multiplicities, odd_color_in, pcf_color_in


class Violation(NamedTuple):
    vertex: int
    reason: str


@dataclass(frozen=True)
class ColorVerdict:
    kind: ColorMode
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "ok": self.ok,
            "violations": [{"vertex": v.vertex, "reason": v.reason} for v in self.violations],
        }


def _proper_violations(
    graph: Graph, coloring: PartialColoring, skip: frozenset[int] = frozenset()
) -> list[Violation]:
    found = []
    for u, v in graph.edges():
        if u in skip or v in skip:
            continue
        cu = coloring.color(u)
        if cu is not None and cu == coloring.color(v):
            found.append(Violation(u, f"shares color {cu} with neighbor {v}"))
    return found


def _condition_violations(
    graph: Graph,
    coloring: PartialColoring,
    mode: ColorMode,
    vertices: Iterable[int],
    skip: frozenset[int] = frozenset(),
) -> list[Violation]:
    """Odd/PCF condition for ``vertices``, counting only neighbors outside ``skip``."""
    found = []
    assignment = coloring.assignment
    for v in vertices:
        nbrs = [u for u in graph.adj[v] if u not in skip]
        if not nbrs:
            continue
        counts = neighbor_multiplicities(graph, assignment, v)
        if mode in (ColorMode.ODD, ColorMode.SEMI_ODD):
            if odd_color_in(counts) is None:
                found.append(Violation(v, "no color of odd multiplicity in its neighborhood"))
        elif pcf_color_in(counts) is None:
            found.append(Violation(v, "no color appearing exactly once in its neighborhood"))
    return found


def verify(graph: Graph, coloring: PartialColoring, kind: ColorMode) -> ColorVerdict:
    """Check a total coloring; isolated vertices are exempt from the odd/PCF condition."""
    if kind not in (ColorMode.PROPER, ColorMode.ODD, ColorMode.PCF):
        raise ColoringError(f"verify handles total kinds only, got {kind.value}")
    if len(coloring) != graph.n:
        raise ColoringError(f"coloring covers {len(coloring)} vertices, graph has {graph.n}")
    if not coloring.is_total():
        raise ColoringError(
            f"{kind.value} check needs a total coloring",
            details={"uncolored": [v for v in range(graph.n) if not coloring.is_colored(v)]},
        )
    violations = _proper_violations(graph, coloring)
    if kind is not ColorMode.PROPER:
        violations += _condition_violations(graph, coloring, kind, range(graph.n))
    return ColorVerdict(kind, tuple(sorted(violations)))


def _semi_verdict(
    graph: Graph,
    removed: Iterable[int],
    coloring: PartialColoring,
    kind: ColorMode,
) -> ColorVerdict:
    y = frozenset(removed)
    if len(coloring) != graph.n:
        raise ColoringError(f"coloring covers {len(coloring)} vertices, graph has {graph.n}")
    colored_in_y = sorted(v for v in y if coloring.is_colored(v))
    if colored_in_y:
        raise ColoringError("vertices of Y must stay uncolored", details={"vertices": colored_in_y})
    uncolored = [v for v in range(graph.n) if v not in y and not coloring.is_colored(v)]
    if uncolored:
        raise ColoringError("coloring must be total on G - Y", details={"vertices": uncolored})

    boundary = {u for v in y for u in graph.adj[v] if u not in y}
    if kind is ColorMode.SEMI_PCF:
        degree_two = {
            v for v in range(graph.n) if v not in y and sum(u not in y for u in graph.adj[v]) == 2
        }
        exempt = boundary & degree_two
    else:
        exempt = boundary
    checked = [v for v in range(graph.n) if v not in y and v not in exempt]
    violations = _proper_violations(graph, coloring, skip=y)
    violations += _condition_violations(graph, coloring, kind, checked, skip=y)
    return ColorVerdict(kind, tuple(sorted(violations)))


def verify_semi_pcf(
    graph: Graph, removed: Iterable[int], coloring: PartialColoring
) -> ColorVerdict:
    """PCF condition on G - Y except at boundary vertices of degree exactly 2 in G - Y.

    Vertices isolated in G - Y have no colored neighbor and are exempt like any isolated vertex.
    """
    return _semi_verdict(graph, removed, coloring, ColorMode.SEMI_PCF)


def verify_semi_odd(
    graph: Graph, removed: Iterable[int], coloring: PartialColoring
) -> ColorVerdict:
    """Odd condition on G - Y except on all of N(Y)."""
    return _semi_verdict(graph, removed, coloring, ColorMode.SEMI_ODD)
