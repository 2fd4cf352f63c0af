"""Exact backtracking solvers for proper, odd and PCF colorings, plus a brute-force oracle."""

from __future__ import annotations

import itertools
import time
from collections import Counter
from collections.abc import Iterable

from ..constants import MAX_BRUTE_COLORINGS, ColorMode
from ..exceptions import InstanceTooLargeError, InvalidParameterError, SolverTimeout
from ..graphs import Graph
from ..logging_config import get_logger
from .partial import PartialColoring

logger = get_logger(__name__)

TOTAL_MODES = (ColorMode.PROPER, ColorMode.ODD, ColorMode.PCF)
_DEADLINE_STRIDE = 1024


def _condition_holds(counts: list[int], mode: ColorMode) -> bool:
    if mode in (ColorMode.ODD, ColorMode.SEMI_ODD):
        return any(k & 1 for k in counts)
    return 1 in counts


class _Backtracker:
    """Colors vertices in descending-degree order with first-use color symmetry breaking.

    A vertex's odd/PCF condition is evaluated once its last neighbor receives a color; vertices
    outside ``checked`` carry no condition.
    """

    def __init__(
        self,
        graph: Graph,
        c: int,
        mode: ColorMode,
        checked: Iterable[int],
        deadline: float | None,
    ) -> None:
        self.graph = graph
        self.c = c
        self.mode = mode
        self.deadline = deadline
        self.order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
        self.colors = [0] * graph.n
        self.counts = [[0] * (c + 1) for _ in range(graph.n)]
        self.remaining = list(graph.degrees)
        self.checked = [False] * graph.n
        if mode is not ColorMode.PROPER:
            for v in checked:
                self.checked[v] = graph.degree(v) > 0
        self.nodes = 0

    def run(self) -> list[int] | None:
        return list(self.colors) if self._extend(0, 0) else None

    def _assign(self, v: int, color: int) -> bool:
        self.colors[v] = color
        ok = True
        for w in self.graph.adj[v]:
            self.counts[w][color] += 1
            self.remaining[w] -= 1
            if ok and self.remaining[w] == 0 and self.checked[w]:
                ok = _condition_holds(self.counts[w], self.mode)
        return ok

    def _unassign(self, v: int, color: int) -> None:
        self.colors[v] = 0
        for w in self.graph.adj[v]:
            self.counts[w][color] -= 1
            self.remaining[w] += 1

    def _extend(self, index: int, used: int) -> bool:
        if index == len(self.order):
            return True
        self.nodes += 1
        if self.deadline is not None and self.nodes % _DEADLINE_STRIDE == 0:
            if time.monotonic() > self.deadline:
                raise SolverTimeout(nodes=self.nodes)
        v = self.order[index]
        own_counts = self.counts[v]
        for color in range(1, min(self.c, used + 1) + 1):
            if own_counts[color]:
                continue
            if self._assign(v, color) and self._extend(index + 1, max(used, color)):
                return True
            self._unassign(v, color)
        return False


def _deadline_from(budget_ms: int | None) -> float | None:
    return None if budget_ms is None else time.monotonic() + budget_ms / 1000


def solve(
    graph: Graph,
    c: int,
    mode: ColorMode,
    *,
    budget_ms: int | None = None,
    deadline: float | None = None,
) -> PartialColoring | None:
    """A total ``mode`` c-coloring, or None once the search space is exhausted.

    Raises SolverTimeout when the budget (or absolute monotonic deadline) runs out.
    """
    if c < 1:
        raise InvalidParameterError("c", f"palette size must be at least 1, got {c}")
    if mode not in TOTAL_MODES:
        raise InvalidParameterError("mode", f"solve handles total modes only, got {mode.value}")
    limit = deadline if deadline is not None else _deadline_from(budget_ms)
    search = _Backtracker(graph, c, mode, range(graph.n), limit)
    colors = search.run()
    logger.debug(
        "solve n=%d c=%d mode=%s: %s after %d nodes",
        graph.n,
        c,
        mode.value,
        "found" if colors is not None else "absent",
        search.nodes,
    )
    return None if colors is None else PartialColoring(c, tuple(colors))


def solve_semi(
    graph: Graph,
    removed: Iterable[int],
    c: int,
    mode: ColorMode,
    *,
    budget_ms: int | None = None,
) -> PartialColoring | None:
    """A coloring of G - Y meeting the semi-PCF or semi-odd verdict for (G, Y)."""
    if mode not in (ColorMode.SEMI_PCF, ColorMode.SEMI_ODD):
        raise InvalidParameterError("mode", f"solve_semi handles semi modes only, got {mode.value}")
    y = frozenset(removed)
    rest, labels = graph.remove_vertices(y)
    boundary = {labels.index(u) for v in y for u in graph.adj[v] if u not in y}
    if mode is ColorMode.SEMI_PCF:
        exempt = {v for v in boundary if rest.degree(v) == 2}
    else:
        exempt = boundary
    search = _Backtracker(
        rest, c, mode, [v for v in range(rest.n) if v not in exempt], _deadline_from(budget_ms)
    )
    colors = search.run()
    if colors is None:
        return None
    assignment: list[int | None] = [None] * graph.n
    for new, old in enumerate(labels):
        assignment[old] = colors[new]
    return PartialColoring(c, tuple(assignment))


def minimum_coloring(
    graph: Graph,
    mode: ColorMode,
    *,
    budget_ms: int | None = None,
    start: int = 1,
) -> tuple[int, PartialColoring | None]:
    """Least c with a ``mode`` c-coloring, and a witness (None for the null graph)."""
    if graph.n == 0:
        return 0, None
    deadline = _deadline_from(budget_ms)
    c = max(start, 1 if graph.m == 0 else 2)
    while True:
        found = solve(graph, c, mode, deadline=deadline)
        if found is not None:
            return c, found
        c += 1


def chi(graph: Graph, mode: ColorMode, *, budget_ms: int | None = None) -> int:
    """Chromatic number for ``mode``; edgeless graphs need 1 color (isolated vertices exempt)."""
    return minimum_coloring(graph, mode, budget_ms=budget_ms)[0]


def _satisfies(graph: Graph, colors: tuple[int, ...], mode: ColorMode) -> bool:
    for u, v in graph.edges():
        if colors[u] == colors[v]:
            return False
    if mode is ColorMode.PROPER:
        return True
    for v in range(graph.n):
        if not graph.adj[v]:
            continue
        counts = Counter(colors[u] for u in graph.adj[v])
        if mode is ColorMode.ODD:
            if not any(k & 1 for k in counts.values()):
                return False
        elif 1 not in counts.values():
            return False
    return True


def brute_oracle(graph: Graph, c: int, mode: ColorMode) -> PartialColoring | None:
    """First satisfying coloring in lexicographic order over all ``c**n`` assignments."""
    if c < 1:
        raise InvalidParameterError("c", f"palette size must be at least 1, got {c}")
    if mode not in TOTAL_MODES:
        raise InvalidParameterError("mode", f"oracle handles total modes only, got {mode.value}")
    if c**graph.n > MAX_BRUTE_COLORINGS:
        raise InstanceTooLargeError("brute_oracle", c**graph.n, MAX_BRUTE_COLORINGS)
    for colors in itertools.product(range(1, c + 1), repeat=graph.n):
        if _satisfies(graph, colors, mode):
            return PartialColoring(c, colors)
    return None
