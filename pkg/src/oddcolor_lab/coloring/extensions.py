"""Constructive extensions of semi colorings, and the colorer for subdivided regular multigraphs.

Every step picks the least color outside its forbidden set. Forbidden-set sizes are checked
against their bounds as the construction runs; a violated bound or a failed final verdict raises
InconsistencyAlarm instead of returning a coloring.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ..constants import ColorMode, LemmaKind
from ..exceptions import InconsistencyAlarm, PreconditionError
from ..graphs import Graph, Multigraph, subdivide
from ..logging_config import get_logger
from ..structures.stats import is_easy, lemma_bound, neighbors_of_degree
from .partial import PartialColoring, neighbor_multiplicities, odd_color_in, pcf_color_in
from .solver import solve
from .verify import verify, verify_semi_odd, verify_semi_pcf

logger = get_logger(__name__)

Colors = list[int | None]


@dataclass(frozen=True)
class ExtensionStep:
    vertex: int
    forbidden: int
    bound: int
    color: int


@dataclass(frozen=True)
class ExtensionResult:
    coloring: PartialColoring
    steps: tuple[ExtensionStep, ...]
    repaired: tuple[int, ...] = field(default=())

    @property
    def max_slack(self) -> int:
        """Smallest gap between a bound and the forbidden-set size it constrained."""
        return min((s.bound - s.forbidden for s in self.steps), default=0)


def _pcf_star(graph: Graph, colors: Colors, w: int) -> int | None:
    """PCF color of ``w``; failing that, a neighbor color when at most two neighbors are colored.

    The fallback keeps an exempt degree-2 vertex whose two colored neighbors agree from being
    handed that color a third time.
    """
    counts = neighbor_multiplicities(graph, colors, w)
    found = pcf_color_in(counts)
    if found is not None:
        return found
    if 1 <= sum(counts.values()) <= 2:
        return min(counts)
    return None


def _odd_unique(graph: Graph, colors: Colors, w: int) -> int | None:
    found = odd_color_in(neighbor_multiplicities(graph, colors, w))
    return found.color if found is not None and found.unique else None


def _colors_of(colors: Colors, vertices: Iterable[int]) -> set[int]:
    return {c for v in vertices if (c := colors[v]) is not None}


def _stars_of(graph: Graph, colors: Colors, vertices: Iterable[int]) -> set[int]:
    return {c for w in vertices if (c := _pcf_star(graph, colors, w)) is not None}


def _odds_of(graph: Graph, colors: Colors, vertices: Iterable[int]) -> set[int]:
    return {c for w in vertices if (c := _odd_unique(graph, colors, w)) is not None}


class _Builder:
    def __init__(self, operation: str, colors: Colors, palette: int) -> None:
        self.operation = operation
        self.colors = colors
        self.palette = palette
        self.steps: list[ExtensionStep] = []

    def paint(self, v: int, forbidden: set[int], bound: int) -> int:
        if len(forbidden) > bound:
            raise InconsistencyAlarm(
                self.operation,
                f"forbidden set at vertex {v} has {len(forbidden)} colors, bound is {bound}",
                details={"vertex": v, "forbidden": sorted(forbidden), "bound": bound},
            )
        for color in range(1, self.palette + 1):
            if color not in forbidden:
                self.colors[v] = color
                self.steps.append(ExtensionStep(v, len(forbidden), bound, color))
                return color
        raise InconsistencyAlarm(self.operation, f"palette exhausted at vertex {v}")

    def finish(
        self, graph: Graph, mode: ColorMode, repaired: Sequence[int] = ()
    ) -> ExtensionResult:
        coloring = PartialColoring(self.palette, tuple(self.colors))
        verdict = verify(graph, coloring, mode)
        if not verdict.ok:
            raise InconsistencyAlarm(
                self.operation,
                "constructed coloring fails its verdict",
                details=verdict.to_dict(),
            )
        logger.debug("%s finished with %d steps", self.operation, len(self.steps))
        return ExtensionResult(coloring, tuple(self.steps), tuple(repaired))


def _require(condition: bool, operation: str, message: str) -> None:
    if not condition:
        raise PreconditionError(operation, message)


def _check_semi(verdict_ok: bool, operation: str, violations: object) -> None:
    if not verdict_ok:
        raise PreconditionError(
            operation, "input is not a valid semi coloring", details={"violations": violations}
        )


def _extend_pcf(
    graph: Graph,
    v: int,
    coloring: PartialColoring,
    c: int,
    *,
    three_neighbors: bool,
) -> ExtensionResult:
    operation = "extend_lemma_semi_pcf_deg3" if three_neighbors else "extend_lemma_semi_pcf"
    low = 7 if three_neighbors else 5
    _require(c >= low, operation, f"needs c >= {low}, got {c}")
    kind = LemmaKind.PCF3 if three_neighbors else LemmaKind.PCF
    top = 3 if three_neighbors else 2
    small = neighbors_of_degree(graph, v, 2, top)
    ones = neighbors_of_degree(graph, v, 1, 1)
    big = neighbors_of_degree(graph, v, top + 1)
    _require(bool(small), operation, f"vertex {v} has no neighbor of degree 2..{top}")
    residue = lemma_bound(graph, v, kind)
    _require(residue <= c - 1, operation, f"lemma residue {residue} exceeds c - 1 = {c - 1}")

    y = {v, *ones, *small}
    semi = verify_semi_pcf(graph, y, coloring)
    _check_semi(semi.ok, operation, semi.to_dict()["violations"])

    if three_neighbors:
        x_set = set()
        for x in sorted(small):
            outside = [w for w in graph.adj[x] if w not in y]
            if outside:
                x_set.add(min(outside))
    else:
        x_set = {w for u in small for w in graph.adj[u] if w != v and w not in small}

    builder = _Builder(operation, list(coloring.assignment), c)
    colors = builder.colors
    forbidden = _colors_of(colors, x_set | set(big)) | _stars_of(graph, colors, big)
    builder.paint(v, forbidden, c - 1)

    n_small = len(small)
    first = min(small)
    v_has_pcf = pcf_color_in(neighbor_multiplicities(graph, colors, v)) is not None
    forbidden = _colors_of(colors, graph.adj[first]) | _stars_of(graph, colors, graph.adj[first])
    per_vertex = 6 if three_neighbors else 4
    if v_has_pcf:
        builder.paint(first, forbidden, per_vertex)
    else:
        forbidden |= _colors_of(colors, big)
        head = 5 if three_neighbors else 3
        builder.paint(first, forbidden, min(head + (c - 1 - n_small) // 4, c - 1))

    for u in sorted((set(ones) | set(small)) - {first}):
        forbidden = _colors_of(colors, graph.adj[u]) | _stars_of(graph, colors, graph.adj[u])
        builder.paint(u, forbidden, per_vertex)
    return builder.finish(graph, ColorMode.PCF)


def extend_lemma_semi_pcf(
    graph: Graph, v: int, coloring: PartialColoring, c: int
) -> ExtensionResult:
    """Extend a semi-PCF coloring of (G, {v} + N1(v) + N2(v)) to a PCF c-coloring of G."""
    return _extend_pcf(graph, v, coloring, c, three_neighbors=False)


def extend_lemma_semi_pcf_deg3(
    graph: Graph, v: int, coloring: PartialColoring, c: int
) -> ExtensionResult:
    """The c >= 7 variant with Y = {v} + N1(v) + N2(v) + N3(v)."""
    return _extend_pcf(graph, v, coloring, c, three_neighbors=True)


def extend_lemma_semi_odd(
    graph: Graph, v: int, coloring: PartialColoring, c: int
) -> ExtensionResult:
    """Extend a semi-odd coloring of (G, {v} + N1(v) + N2(v)) to an odd c-coloring of G.

    Easy 3+-neighbors left without an odd color are repaired afterwards by recoloring one of
    their 2--neighbors.
    """
    operation = "extend_lemma_semi_odd"
    _require(c >= 5, operation, f"needs c >= 5, got {c}")
    ones = neighbors_of_degree(graph, v, 1, 1)
    twos = neighbors_of_degree(graph, v, 2, 2)
    big = neighbors_of_degree(graph, v, 3)
    _require(
        graph.degree(v) % 2 == 1 or bool(ones or twos),
        operation,
        f"vertex {v} has even degree and no 2--neighbor",
    )
    residue = lemma_bound(graph, v, LemmaKind.ODD)
    _require(residue <= c - 1, operation, f"lemma residue {residue} exceeds c - 1 = {c - 1}")

    y = {v, *ones, *twos}
    semi = verify_semi_odd(graph, y, coloring)
    _check_semi(semi.ok, operation, semi.to_dict()["violations"])

    easy = [u for u in big if is_easy(graph, u)]
    x_set = {w for u in twos for w in graph.adj[u] if w != v and w not in twos}

    builder = _Builder(operation, list(coloring.assignment), c)
    colors = builder.colors
    forbidden = _colors_of(colors, x_set | set(big)) | _odds_of(
        graph, colors, [u for u in big if u not in easy]
    )
    builder.paint(v, forbidden, c - 1)

    for u in sorted(twos):
        forbidden = _colors_of(colors, graph.adj[u]) | _odds_of(graph, colors, graph.adj[u])
        builder.paint(u, forbidden, min(4, c - 1))
    for u in sorted(ones):
        forbidden = _colors_of(colors, [v]) | _odds_of(graph, colors, [v])
        builder.paint(u, forbidden, min(2, c - 1))

    repaired = []
    for u in sorted(easy):
        if odd_color_in(neighbor_multiplicities(graph, colors, u)) is not None:
            continue
        candidates = [x for x in graph.adj[u] if graph.degree(x) <= 2]
        if not candidates:
            raise InconsistencyAlarm(operation, f"easy neighbor {u} has no 2--neighbor to recolor")
        x = min(candidates)
        colors[x] = None
        forbidden = _colors_of(colors, graph.adj[x]) | _odds_of(graph, colors, graph.adj[x])
        builder.paint(x, forbidden, min(4, c - 1))
        repaired.append(u)
    return builder.finish(graph, ColorMode.ODD, repaired)


def color_subdivided(multigraph: Multigraph, c: int, mode: ColorMode) -> ExtensionResult:
    """Color the subdivision of a connected c-regular multigraph that is not simple K_{c+1}.

    Branch vertices take a proper c-coloring of the multigraph found by the exact solver; each
    subdivision vertex then avoids its neighbors' colors and their PCF (or unique odd) colors.
    """
    operation = "color_subdivided"
    _require(c >= 5, operation, f"needs c >= 5, got {c}")
    _require(mode in (ColorMode.ODD, ColorMode.PCF), operation, "mode must be odd or pcf")
    _require(
        multigraph.regularity() == c, operation, f"multigraph is not {c}-regular"
    )
    _require(multigraph.is_connected(), operation, "multigraph is not connected")
    _require(
        not (multigraph.n == c + 1 and multigraph.is_simple_complete()),
        operation,
        f"multigraph is the simple K_{c + 1}",
    )
    branch = solve(multigraph.underlying(), c, ColorMode.PROPER)
    if branch is None:
        raise InconsistencyAlarm(operation, "no proper branch coloring found")

    graph = subdivide(multigraph)
    builder = _Builder(operation, [*branch.assignment, *([None] * len(multigraph.edges))], c)
    colors = builder.colors
    for s in range(multigraph.n, graph.n):
        nbrs = graph.adj[s]
        if mode is ColorMode.PCF:
            forbidden = _colors_of(colors, nbrs) | _stars_of(graph, colors, nbrs)
        else:
            forbidden = _colors_of(colors, nbrs) | _odds_of(graph, colors, nbrs)
        builder.paint(s, forbidden, 4)
    return builder.finish(graph, mode)
