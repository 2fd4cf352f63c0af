"""Per-vertex degree statistics, easy vertices, close 2-vertices and lemma residues."""

from __future__ import annotations

from dataclasses import dataclass

from ..constants import LemmaKind
from ..exceptions import InvalidParameterError
from ..graphs import Graph, ThreadDecomposition, threads


def is_easy(graph: Graph, v: int) -> bool:
    """A 3+-vertex of odd degree or with a neighbor of degree at most 2."""
    d = graph.degree(v)
    if d < 3:
        return False
    return d % 2 == 1 or any(graph.degree(u) <= 2 for u in graph.adj[v])


@dataclass(frozen=True)
class DegStats:
    """Neighborhood degree profile of one vertex."""

    vertex: int
    degree: int
    neighbor_degrees: tuple[int, ...]
    n_easy: int

    @classmethod
    def of(cls, graph: Graph, v: int) -> DegStats:
        return cls(
            vertex=v,
            degree=graph.degree(v),
            neighbor_degrees=tuple(graph.degree(u) for u in graph.adj[v]),
            n_easy=sum(is_easy(graph, u) for u in graph.adj[v]),
        )

    def n_exactly(self, d: int) -> int:
        return sum(1 for k in self.neighbor_degrees if k == d)

    def n_at_most(self, d: int) -> int:
        return sum(1 for k in self.neighbor_degrees if k <= d)

    def n_at_least(self, d: int) -> int:
        return sum(1 for k in self.neighbor_degrees if k >= d)

    @property
    def n1(self) -> int:
        return self.n_exactly(1)

    @property
    def n2(self) -> int:
        return self.n_exactly(2)

    @property
    def n3(self) -> int:
        return self.n_exactly(3)

    @property
    def n4plus(self) -> int:
        return self.n_at_least(4)

    @property
    def ne(self) -> int:
        return self.n_easy


def neighbors_of_degree(graph: Graph, v: int, low: int, high: int | None = None) -> list[int]:
    """Neighbors with degree in ``low..high`` (``high=None`` means unbounded)."""
    return [
        u
        for u in graph.adj[v]
        if graph.degree(u) >= low and (high is None or graph.degree(u) <= high)
    ]


def lemma_bound(graph: Graph, v: int, kind: LemmaKind) -> int:
    """Residue ``2d - 2n1 - n2 [- n3 | - ne]`` that the extension lemmas compare against c."""
    stats = DegStats.of(graph, v)
    residue = 2 * stats.degree - 2 * stats.n1 - stats.n2
    if kind is LemmaKind.PCF3:
        residue -= stats.n3
    elif kind is LemmaKind.ODD:
        residue -= stats.ne
    return residue


def close_two_vertices(
    graph: Graph, v: int, decomposition: ThreadDecomposition | None = None
) -> frozenset[int]:
    """2-vertices on threads anchored at the 3+-vertex ``v``."""
    if graph.degree(v) < 3:
        raise InvalidParameterError(
            "v", f"close 2-vertices need a 3+-vertex, d({v}) = {graph.degree(v)}"
        )
    return (decomposition or threads(graph)).close_vertices(v)


def girth_threshold(c: int) -> int:
    """Girth ``ceil(4c / (c-2))`` beyond which planar graphs are PCF c-colorable."""
    if c < 5:
        raise InvalidParameterError("c", f"girth threshold is defined for c >= 5, got {c}")
    return -(-4 * c // (c - 2))
