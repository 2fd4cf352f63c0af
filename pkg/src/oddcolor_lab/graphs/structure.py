"""Structural primitives: blocks, girth, short cycles and threads."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import networkx as nx

from ..constants import MAX_CYCLE_LENGTH
from ..exceptions import InvalidParameterError
from .core import Edge, Graph
from .graph6 import to_networkx

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as sorted vertex tuples (ordered by least vertex) plus the cut vertices."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]

    def blocks_containing(self, v: int) -> list[tuple[int, ...]]:
        return [block for block in self.blocks if v in block]

    def block_edges(self, graph: Graph, block: Sequence[int]) -> list[Edge]:
        # two blocks share at most one vertex, so induced edges belong to the block
        members = set(block)
        return [(u, v) for u, v in graph.edges() if u in members and v in members]


def blocks(graph: Graph) -> BlockDecomposition:
    """Block-cut decomposition; bridges are 2-vertex blocks, isolated vertices have none."""
    nx_graph = to_networkx(graph)
    found = sorted(tuple(sorted(component)) for component in nx.biconnected_components(nx_graph))
    return BlockDecomposition(
        blocks=tuple(found),
        cut_vertices=frozenset(nx.articulation_points(nx_graph)),
    )


def girth(graph: Graph) -> int | None:
    """Shortest cycle length by a BFS from every vertex; None for forests."""
    best: int | None = None
    for root in range(graph.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in graph.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Least rotation/reflection of a cyclic vertex sequence."""
    k = len(cycle)
    start = min(range(k), key=lambda i: cycle[i])
    forward = tuple(cycle[(start + i) % k] for i in range(k))
    backward = tuple(cycle[(start - i) % k] for i in range(k))
    return min(forward, backward)


def short_cycles(graph: Graph, max_length: int) -> list[Cycle]:
    """Every simple cycle of length ``3..max_length`` exactly once, canonicalized.

    Each cycle is grown from its least vertex through larger vertices only, and kept in the
    direction whose second vertex is smaller than its last, so no deduplication pass is needed.
    """
    if max_length > MAX_CYCLE_LENGTH:
        raise InvalidParameterError(
            "max_length", f"cycle enumeration is capped at {MAX_CYCLE_LENGTH}, got {max_length}"
        )
    found: list[Cycle] = []
    if max_length < 3:
        return found

    for start in range(graph.n):
        _grow(graph, [start], {start}, max_length, found)
    found.sort(key=lambda c: (len(c), c))
    return found


def _grow(graph: Graph, path: list[int], on_path: set[int], limit: int, out: list[Cycle]) -> None:
    start = path[0]
    for w in graph.adj[path[-1]]:
        if w == start and len(path) >= 3 and path[1] < path[-1]:
            out.append(tuple(path))
        elif w > start and w not in on_path and len(path) < limit:
            path.append(w)
            on_path.add(w)
            _grow(graph, path, on_path, limit, out)
            path.pop()
            on_path.discard(w)


def cycle_edges(cycle: Sequence[int]) -> frozenset[Edge]:
    k = len(cycle)
    return frozenset(
        (a, b) if a < b else (b, a) for a, b in ((cycle[i], cycle[(i + 1) % k]) for i in range(k))
    )


def cycles_edge_adjacent(first: Sequence[int], second: Sequence[int]) -> bool:
    """Distinct cycles sharing at least one edge."""
    edges_a, edges_b = cycle_edges(first), cycle_edges(second)
    return edges_a != edges_b and bool(edges_a & edges_b)


def cycles_vertex_adjacent(first: Sequence[int], second: Sequence[int]) -> bool:
    """Distinct cycles sharing at least one vertex (the looser reading, kept for audits)."""
    return cycle_edges(first) != cycle_edges(second) and bool(set(first) & set(second))


@dataclass(frozen=True)
class AdjacencyCounts:
    edge_sharing: int
    vertex_sharing: int


def small_cycle_adjacencies(
    graph: Graph, short_max: int = 4, long_max: int = 7
) -> AdjacencyCounts:
    """Count pairs (short cycle, distinct longer-bounded cycle) under both adjacency readings."""
    cycles = short_cycles(graph, long_max)
    shorts = [c for c in cycles if len(c) <= short_max]
    edge_pairs = vertex_pairs = 0
    for c1 in shorts:
        for c2 in cycles:
            if cycles_edge_adjacent(c1, c2):
                edge_pairs += 1
            if cycles_vertex_adjacent(c1, c2):
                vertex_pairs += 1
    return AdjacencyCounts(edge_sharing=edge_pairs, vertex_sharing=vertex_pairs)


def has_adjacent_short_cycles(graph: Graph, short_max: int = 4, long_max: int = 7) -> bool:
    cycles = short_cycles(graph, long_max)
    return any(
        cycles_edge_adjacent(c1, c2) for c1 in cycles if len(c1) <= short_max for c2 in cycles
    )


@dataclass(frozen=True)
class Thread:
    """Maximal run of degree-2 vertices.

    ``anchors`` holds the outside neighbors at both ends (equal when the run closes a cycle through
    one vertex) and is None for a cycle component made only of 2-vertices. An anchor may be a
    1-vertex: pendant ends stay on the record so the odd-degree 2-thread check can see them, and
    every degree-sensitive consumer filters anchors by degree itself.
    """

    vertices: tuple[int, ...]
    anchors: tuple[int, int] | None

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def cyclic(self) -> bool:
        return self.anchors is None

    def end_at(self, anchor: int) -> tuple[int, ...] | None:
        """Thread vertices ordered starting from the end next to ``anchor``."""
        if self.anchors is None:
            return None
        if self.anchors[0] == anchor:
            return self.vertices
        if self.anchors[1] == anchor:
            return tuple(reversed(self.vertices))
        return None


@dataclass(frozen=True)
class ThreadDecomposition:
    threads: tuple[Thread, ...]
    _owner: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        owner = {v: i for i, thread in enumerate(self.threads) for v in thread.vertices}
        object.__setattr__(self, "_owner", owner)

    def thread_of(self, v: int) -> Thread | None:
        index = self._owner.get(v)
        return None if index is None else self.threads[index]

    def threads_at(self, anchor: int) -> list[Thread]:
        """Threads with ``anchor`` at one or both ends (cyclic threads never qualify)."""
        return [t for t in self.threads if t.anchors is not None and anchor in t.anchors]

    def is_adjacent_to_thread(self, v: int, length: int) -> bool | None:
        """Whether ``v`` anchors a thread with at least ``length`` vertices.

        None when ``v`` itself lies on a cyclic thread (anchor queries do not apply).
        """
        own = self.thread_of(v)
        if own is not None and own.cyclic:
            return None
        return any(t.length >= length for t in self.threads_at(v))

    def close_vertices(self, anchor: int) -> frozenset[int]:
        return frozenset(v for t in self.threads_at(anchor) for v in t.vertices)


def threads(graph: Graph) -> ThreadDecomposition:
    """Split the degree-2 vertices into maximal threads."""
    two = {v for v in range(graph.n) if graph.degree(v) == 2}
    seen: set[int] = set()
    found: list[Thread] = []
    for v in sorted(two):
        if v in seen:
            continue
        component = _collect(graph, v, two)
        seen.update(component)
        ends = [u for u in component if sum(w in two for w in graph.adj[u]) < 2]
        if not ends:
            found.append(Thread(vertices=_walk_cycle(graph, min(component), two), anchors=None))
            continue
        ordered = _walk_path(graph, min(ends), two)
        if len(ordered) == 1:
            a, b = graph.adj[ordered[0]]
            anchors = (a, b)
        else:
            first_out = next(w for w in graph.adj[ordered[0]] if w not in two)
            last_out = next(w for w in graph.adj[ordered[-1]] if w not in two)
            anchors = (first_out, last_out)
        found.append(Thread(vertices=ordered, anchors=anchors))
    found.sort(key=lambda t: min(t.vertices))
    return ThreadDecomposition(threads=tuple(found))


def _collect(graph: Graph, root: int, allowed: set[int]) -> set[int]:
    component = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in graph.adj[u]:
            if w in allowed and w not in component:
                component.add(w)
                stack.append(w)
    return component


def _walk_path(graph: Graph, start: int, allowed: set[int]) -> tuple[int, ...]:
    ordered = [start]
    previous = -1
    current = start
    while True:
        step = [w for w in graph.adj[current] if w in allowed and w != previous]
        if not step or step[0] == start:
            break
        previous, current = current, step[0]
        ordered.append(current)
    return tuple(ordered)


def _walk_cycle(graph: Graph, start: int, allowed: set[int]) -> tuple[int, ...]:
    ordered = [start]
    previous, current = start, min(graph.adj[start])
    while current != start:
        ordered.append(current)
        nxt = next(w for w in graph.adj[current] if w != previous)
        previous, current = current, nxt
    return tuple(ordered)


def induced_edges(graph: Graph, vertices: Iterable[int]) -> list[Edge]:
    members = set(vertices)
    return [(u, v) for u, v in graph.edges() if u in members and v in members]
