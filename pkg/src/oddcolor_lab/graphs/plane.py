"""Plane graphs given by explicit face boundary walks, and their text format.

Format::

    planegraph <n> <m> <f>
    e <u> <v>          # m lines
    f <k> <v1> ... <vk>  # f lines, one closed boundary walk each

Tokens are whitespace separated and ``#`` starts a comment.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ..constants import PLANEGRAPH_HEADER
from ..exceptions import GraphFormatError, InvalidGraphError
from .core import Edge, Graph, from_edges
from .structure import has_adjacent_short_cycles

Walk = tuple[int, ...]


def walk_edges(walk: Sequence[int]) -> Iterator[Edge]:
    k = len(walk)
    for i in range(k):
        a, b = walk[i], walk[(i + 1) % k]
        yield (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PlaneGraph:
    graph: Graph
    faces: tuple[Walk, ...]

    def __post_init__(self) -> None:
        incidences: Counter[Edge] = Counter()
        for index, walk in enumerate(self.faces):
            if len(walk) < 2:
                raise InvalidGraphError(f"face {index} has a boundary walk shorter than 2")
            for u, v in walk_edges(walk):
                if u == v or not self.graph.has_edge(u, v):
                    raise InvalidGraphError(
                        f"face {index} steps along ({u}, {v}), which is not an edge",
                        details={"face": index},
                    )
                incidences[(u, v)] += 1
        for edge in self.graph.edges():
            if incidences[edge] != 2:
                raise InvalidGraphError(
                    f"edge {edge} appears {incidences[edge]} times on face boundaries, expected 2",
                    details={"edge": list(edge)},
                )
        if self.graph.m and self.graph.is_connected() and self.euler_characteristic != 2:
            raise InvalidGraphError(
                f"connected plane graph violates Euler's formula: V-E+F = "
                f"{self.euler_characteristic}"
            )

    @property
    def euler_characteristic(self) -> int:
        return self.graph.n - self.graph.m + len(self.faces)

    def face_degree(self, f: int) -> int:
        return len(self.faces[f])

    def incidences(self, f: int) -> Iterator[tuple[int, int, int]]:
        """Yield ``(x, v, z)`` for every occurrence of ``v`` on face ``f`` with walk neighbors."""
        walk = self.faces[f]
        k = len(walk)
        for i, v in enumerate(walk):
            yield walk[i - 1], v, walk[(i + 1) % k]

    def faces_at(self, v: int) -> list[int]:
        return [f for f, walk in enumerate(self.faces) if v in walk]


def hypothesis_planar_odd6(source: PlaneGraph | Graph) -> bool:
    """No cycle of length at most 4 shares an edge with a distinct cycle of length at most 7."""
    graph = source.graph if isinstance(source, PlaneGraph) else source
    return not has_adjacent_short_cycles(graph, short_max=4, long_max=7)


def _tokens(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if content:
            rows.append((number, content))
    return rows


def _ints(values: list[str], line: int) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError as exc:
        raise GraphFormatError(f"expected integers, got {values}", line=line) from exc


def parse_plane_graph(text: str) -> PlaneGraph:
    rows = _tokens(text)
    if not rows or rows[0][1][0] != PLANEGRAPH_HEADER or len(rows[0][1]) != 4:
        raise GraphFormatError(f"expected header '{PLANEGRAPH_HEADER} <n> <m> <f>'", line=1)
    header_line, header = rows[0]
    n, m, f = _ints(header[1:], header_line)
    body = rows[1:]
    if len(body) != m + f:
        raise GraphFormatError(
            f"header announces {m} edges and {f} faces but {len(body)} records follow"
        )
    edges = []
    for line, row in body[:m]:
        if row[0] != "e" or len(row) != 3:
            raise GraphFormatError("edge records look like 'e <u> <v>'", line=line)
        u, v = _ints(row[1:], line)
        edges.append((u, v))
    faces = []
    for line, row in body[m:]:
        if row[0] != "f" or len(row) < 2:
            raise GraphFormatError("face records look like 'f <k> <v1> ... <vk>'", line=line)
        values = _ints(row[1:], line)
        if values[0] != len(values) - 1:
            raise GraphFormatError(
                f"face announces {values[0]} vertices but lists {len(values) - 1}", line=line
            )
        faces.append(tuple(values[1:]))
    return PlaneGraph(graph=from_edges(n, edges), faces=tuple(faces))


def write_plane_graph(plane: PlaneGraph) -> str:
    lines = [f"{PLANEGRAPH_HEADER} {plane.graph.n} {plane.graph.m} {len(plane.faces)}"]
    lines.extend(f"e {u} {v}" for u, v in plane.graph.edges())
    lines.extend(f"f {len(walk)} " + " ".join(map(str, walk)) for walk in plane.faces)
    return "\n".join(lines) + "\n"
