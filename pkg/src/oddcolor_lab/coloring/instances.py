"""Seeded admissible instances for the extension constructions."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass

from ..constants import ColorMode, LemmaKind
from ..exceptions import InvalidParameterError, SolverTimeout
from ..generators import SeededStream
from ..graphs import Graph, from_edges
from ..logging_config import get_logger
from ..structures.stats import lemma_bound, neighbors_of_degree
from .extensions import (
    ExtensionResult,
    extend_lemma_semi_odd,
    extend_lemma_semi_pcf,
    extend_lemma_semi_pcf_deg3,
)
from .partial import PartialColoring
from .solver import solve_semi

logger = get_logger(__name__)

MIN_PALETTE = {LemmaKind.PCF: 5, LemmaKind.PCF3: 7, LemmaKind.ODD: 5}

EXTENSIONS: dict[LemmaKind, Callable[[Graph, int, PartialColoring, int], ExtensionResult]] = {
    LemmaKind.PCF: extend_lemma_semi_pcf,
    LemmaKind.PCF3: extend_lemma_semi_pcf_deg3,
    LemmaKind.ODD: extend_lemma_semi_odd,
}

_SEMI_MODE = {
    LemmaKind.PCF: ColorMode.SEMI_PCF,
    LemmaKind.PCF3: ColorMode.SEMI_PCF,
    LemmaKind.ODD: ColorMode.SEMI_ODD,
}


@dataclass(frozen=True)
class LemmaInstance:
    graph: Graph
    vertex: int
    coloring: PartialColoring
    c: int
    kind: LemmaKind

    def extend(self) -> ExtensionResult:
        return EXTENSIONS[self.kind](self.graph, self.vertex, self.coloring, self.c)


def removed_set(graph: Graph, v: int, kind: LemmaKind) -> frozenset[int]:
    """Y = {v} plus its 1- and 2-neighbors (and 3-neighbors for the PCF3 variant)."""
    top = 3 if kind is LemmaKind.PCF3 else 2
    return frozenset([v, *neighbors_of_degree(graph, v, 1, top)])


def lemma_applicable(graph: Graph, v: int, kind: LemmaKind, c: int) -> bool:
    """Structural preconditions of the extension at ``v`` (the semi coloring aside)."""
    if c < MIN_PALETTE[kind] or lemma_bound(graph, v, kind) > c - 1:
        return False
    if kind is LemmaKind.PCF:
        return bool(neighbors_of_degree(graph, v, 2, 2))
    if kind is LemmaKind.PCF3:
        return bool(neighbors_of_degree(graph, v, 2, 3))
    return graph.degree(v) % 2 == 1 or bool(neighbors_of_degree(graph, v, 1, 2))


def _random_sparse_graph(stream: SeededStream) -> Graph:
    """Random base graph whose edges become threads of up to two 2-vertices, plus pendants."""
    n0 = 3 + stream.below(4)
    pairs = [(u, v) for u in range(n0) for v in range(u + 1, n0)]
    stream.shuffle(pairs)
    low = n0 - 1
    m0 = low + stream.below(len(pairs) - low + 1)
    edges: list[tuple[int, int]] = []
    n = n0
    for u, w in pairs[:m0]:
        inner = stream.below(3)
        chain = [u, *range(n, n + inner), w]
        n += inner
        edges.extend(zip(chain, chain[1:]))
    for _ in range(stream.below(3)):
        edges.append((stream.below(n), n))
        n += 1
    return from_edges(n, edges)


def admissible_instances(
    kind: LemmaKind,
    c: int,
    count: int,
    seed: int = 0,
    *,
    budget_ms: int | None = 2_000,
    max_attempts: int | None = None,
) -> Iterator[LemmaInstance]:
    """Yield up to ``count`` seeded instances meeting every precondition of the extension."""
    if c < MIN_PALETTE[kind]:
        raise InvalidParameterError("c", f"{kind.value} instances need c >= {MIN_PALETTE[kind]}")
    stream = SeededStream(seed)
    attempts = max_attempts if max_attempts is not None else 50 * count
    produced = 0
    for _ in range(attempts):
        if produced >= count:
            return
        graph = _random_sparse_graph(stream)
        candidates = [v for v in range(graph.n) if lemma_applicable(graph, v, kind, c)]
        if not candidates:
            continue
        v = candidates[stream.below(len(candidates))]
        try:
            coloring = solve_semi(
                graph, removed_set(graph, v, kind), c, _SEMI_MODE[kind], budget_ms=budget_ms
            )
        except SolverTimeout:
            logger.warning("semi coloring search timed out on an instance candidate; skipping")
            continue
        if coloring is None:
            continue
        produced += 1
        yield LemmaInstance(graph=graph, vertex=v, coloring=coloring, c=c, kind=kind)
    logger.info("generated %d of %d %s instances", produced, count, kind.value)
