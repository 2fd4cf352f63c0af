"""graph6 interchange through networkx's reference codec."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import networkx as nx

from ..constants import MAX_GRAPH6_VERTICES
from ..exceptions import GraphFormatError
from .core import Graph, from_edges

GRAPH6_HEADER = ">>graph6<<"


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Relabel nodes to ``0..n-1`` in sorted order and build a Graph."""
    order = {node: i for i, node in enumerate(sorted(nx_graph.nodes))}
    return from_edges(len(order), [(order[u], order[v]) for u, v in nx_graph.edges])


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header, trailing newline allowed)."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise GraphFormatError("empty graph6 line")
    if line.startswith(":") or line.startswith(";"):
        raise GraphFormatError("sparse6/digraph6 input is not graph6", details={"line": line})
    if any(not 63 <= ord(ch) <= 126 for ch in line):
        raise GraphFormatError("graph6 characters must lie in '?'..'~'", details={"line": line})
    try:
        nx_graph = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as exc:
        raise GraphFormatError(f"malformed graph6 line: {exc}", details={"line": line}) from exc
    return from_networkx(nx_graph)


def write_graph6(graph: Graph) -> str:
    """Encode without header or newline."""
    if graph.n > MAX_GRAPH6_VERTICES:
        # networkx handles larger n, but nothing downstream is sized for it
        raise GraphFormatError(f"graph6 output limited to {MAX_GRAPH6_VERTICES} vertices")
    encoded: bytes = nx.to_graph6_bytes(to_networkx(graph), header=False)
    return encoded.decode("ascii").strip()


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank, non-comment line."""
    for number, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            yield number, parse_graph6(stripped)
        except GraphFormatError as exc:
            raise GraphFormatError(exc.message, line=number, details=exc.details) from exc
