"""Immutable simple graphs and loopless multigraphs."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

from ..exceptions import InvalidGraphError

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise InvalidGraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        masks = []
        for v, nbrs in enumerate(self.adj):
            mask = 0
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        object.__setattr__(self, "_masks", tuple(masks))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def mask(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitset."""
        return self._masks[v]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def is_isolated(self, v: int) -> bool:
        return not self.adj[v]

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, ordered by least vertex."""
        seen = [False] * self.n
        result: list[tuple[int, ...]] = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            stack = [root]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            result.append(tuple(sorted(comp)))
        return result

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        subset = 0
        for v in vertices:
            subset |= 1 << v
        total = 0
        rest = subset
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            total += (self._masks[v] & subset).bit_count()
            rest ^= low
        return total // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph relabelled ``0..k-1`` plus the old label of each new vertex."""
        kept = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[v]) for u, v in self.edges() if u in index and v in index
        ]
        return from_edges(len(kept), edges), kept

    def remove_vertices(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        dropped = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in dropped)

    def add_edge(self, u: int, v: int) -> Graph:
        return from_edges(self.n, [*self.edges(), (u, v)])

    def disjoint_union(self, other: Graph) -> Graph:
        shifted = [(u + self.n, v + self.n) for u, v in other.edges()]
        return from_edges(self.n + other.n, [*self.edges(), *shifted])


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting loops, duplicates and out-of-range vertices."""
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"self-loop at vertex {u}")
        if v in neighbor_sets[u]:
            raise InvalidGraphError(f"duplicate edge ({u}, {v})")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in neighbor_sets))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; ``edges`` keeps parallel pairs, normalized and sorted."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        normalized = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge ({u}, {v}) has a vertex outside 0..{self.n - 1}")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            normalized.append(_normalize_edge(u, v))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return tuple(counts)

    def regularity(self) -> int | None:
        """Common degree if the multigraph is regular, else None."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def multiplicities(self) -> Counter[Edge]:
        return Counter(self.edges)

    def underlying(self) -> Graph:
        """Simple graph with one edge per adjacent pair."""
        return from_edges(self.n, sorted(set(self.edges)))

    def is_simple_complete(self) -> bool:
        mult = self.multiplicities()
        return len(mult) == self.n * (self.n - 1) // 2 and all(k == 1 for k in mult.values())

    def is_connected(self) -> bool:
        return self.underlying().is_connected()


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multigraph(n: int) -> Multigraph:
    return Multigraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def subdivide(multigraph: Multigraph) -> Graph:
    """Replace every edge (parallel ones included) by a path through a new 2-vertex.

    Branch vertices keep their labels; the subdivision vertex of the i-th edge is ``n + i``.
    """
    n = multigraph.n
    edges = []
    for i, (u, v) in enumerate(multigraph.edges):
        edges.append((u, n + i))
        edges.append((v, n + i))
    return from_edges(n + len(multigraph.edges), edges)
