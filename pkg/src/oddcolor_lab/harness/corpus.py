"""Graph corpora: exhaustive small-graph enumeration, families, graph6 streams and plane files."""

from __future__ import annotations

import sys
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Any

import networkx as nx

from ..config import get_config
from ..exceptions import GraphFormatError, InvalidParameterError
from ..generators import generate
from ..graphs import (
    PLANE_FIXTURES,
    Graph,
    PlaneGraph,
    empty_graph,
    iter_graph6,
    parse_graph6,
    parse_plane_graph,
    plane_fixture,
    to_networkx,
    write_graph6,
)
from ..logging_config import get_logger

logger = get_logger(__name__)

ENUM_PREFIX = "enum:"
FILE_PREFIX = "file:"
PLANE_FILE_PREFIX = "planefile:"
ALL_PLANE_FIXTURES = "plane:all"
STDIN = "-"


@dataclass(frozen=True)
class CorpusItem:
    """One input graph with the corpus it came from and its position there."""

    index: int
    label: str
    graph: Graph
    plane: PlaneGraph | None = None

    @property
    def source(self) -> Graph | PlaneGraph:
        return self.plane if self.plane is not None else self.graph

    @property
    def graph6(self) -> str:
        return write_graph6(self.graph)

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "label": self.label,
            "graph6": self.graph6,
            "n": self.graph.n,
            "m": self.graph.m,
        }


def _invariant(graph: Graph) -> tuple[Any, ...]:
    """Isomorphism invariant used to bucket candidates before the exact test."""
    degrees = graph.degrees
    return (
        tuple(sorted(degrees)),
        tuple(sorted(tuple(sorted(degrees[u] for u in graph.adj[v])) for v in range(graph.n))),
    )


def graphs_on(n: int) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, by edge count.

    Each level adds one edge to every representative of the level below and keeps one graph
    per isomorphism class; every edge subset is reached this way without visiting all of them.
    """
    if n < 0:
        raise InvalidParameterError("n", f"vertex count must be non-negative, got {n}")
    level = [empty_graph(n)]
    found = list(level)
    pairs = list(combinations(range(n), 2))
    for _ in pairs:
        buckets: dict[tuple[Any, ...], list[nx.Graph]] = {}
        following: list[Graph] = []
        for base in level:
            for u, v in pairs:
                if base.has_edge(u, v):
                    continue
                candidate = base.add_edge(u, v)
                bucket = buckets.setdefault(_invariant(candidate), [])
                as_nx = to_networkx(candidate)
                if any(nx.is_isomorphic(as_nx, other) for other in bucket):
                    continue
                bucket.append(as_nx)
                following.append(candidate)
        if not following:
            break
        found.extend(following)
        level = following
    return found


def enumerate_graphs(
    max_n: int, *, connected: bool = True, min_n: int = 1
) -> Iterator[Graph]:
    """Every graph with ``min_n..max_n`` vertices up to isomorphism, smallest first."""
    limit = get_config().max_enum_vertices
    if max_n > limit:
        raise InvalidParameterError(
            "max_n",
            f"exhaustive enumeration is capped at {limit} vertices "
            "(raise ODDCOLOR_MAX_ENUM to go further)",
        )
    for n in range(min_n, max_n + 1):
        produced = 0
        for graph in graphs_on(n):
            if connected and not graph.is_connected():
                continue
            produced += 1
            yield graph
        logger.debug("enumerated %d graphs on %d vertices", produced, n)


def _read_lines(path: str) -> Iterable[str]:
    if path == STDIN:
        return sys.stdin
    try:
        return Path(path).read_text(encoding="ascii").splitlines()
    except OSError as exc:
        raise InvalidParameterError("corpus", f"cannot read {path}: {exc}") from exc


def read_plane_file(path: str) -> PlaneGraph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise InvalidParameterError("plane", f"cannot read {path}: {exc}") from exc
    return parse_plane_graph(text)


def _graphs_of(spec: str, max_n: int | None) -> Iterator[tuple[str, Graph | PlaneGraph]]:
    if spec.startswith(ENUM_PREFIX):
        body = spec[len(ENUM_PREFIX):]
        if not body.isdigit():
            raise GraphFormatError(f"enumeration spec looks like 'enum:<n>', got {spec!r}")
        size = int(body) if max_n is None else min(int(body), max_n)
        for graph in enumerate_graphs(size):
            yield spec, graph
    elif spec == ALL_PLANE_FIXTURES:
        for name in sorted(PLANE_FIXTURES):
            yield f"plane:{name}", plane_fixture(name)
    elif spec.startswith(PLANE_FILE_PREFIX):
        path = spec[len(PLANE_FILE_PREFIX):]
        yield path, read_plane_file(path)
    elif spec == STDIN or spec.startswith(FILE_PREFIX):
        path = STDIN if spec == STDIN else spec[len(FILE_PREFIX):]
        for _, graph in iter_graph6(_read_lines(path)):
            yield spec, graph
    else:
        yield spec, generate(spec)


def load_corpus(specs: Iterable[str], *, max_n: int | None = None) -> Iterator[CorpusItem]:
    """Items of every corpus spec in order, indexed from 0 across all specs.

    A spec is ``enum:<n>``, ``plane:all``, ``planefile:<path>``, ``file:<path>``, ``-`` for
    graph6 lines on stdin, or any family spec understood by the generators.
    """
    index = 0
    for spec in specs:
        for label, built in _graphs_of(spec.strip(), max_n):
            if isinstance(built, PlaneGraph):
                yield CorpusItem(index=index, label=label, graph=built.graph, plane=built)
            else:
                yield CorpusItem(index=index, label=label, graph=built)
            index += 1


def resolve_source(
    *,
    graph6: str | None = None,
    family: str | None = None,
    plane: str | None = None,
    plane_fixture_name: str | None = None,
) -> Graph | PlaneGraph:
    """The single graph named by exactly one of the source options."""
    given = [
        name
        for name, value in (
            ("graph6", graph6),
            ("family", family),
            ("plane", plane),
            ("plane_fixture", plane_fixture_name),
        )
        if value is not None
    ]
    if len(given) != 1:
        raise InvalidParameterError(
            "source",
            "exactly one of graph6, family, plane or plane_fixture is required, "
            f"got {given or 'none'}",
        )
    if graph6 is not None:
        return parse_graph6(graph6)
    if family is not None:
        return generate(family)
    if plane is not None:
        return read_plane_file(plane)
    assert plane_fixture_name is not None
    return plane_fixture(plane_fixture_name)
