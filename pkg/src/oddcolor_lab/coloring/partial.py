"""Partial colorings and the neighborhood color queries built on them."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from ..exceptions import ColoringError
from ..graphs import Graph


@dataclass(frozen=True)
class PartialColoring:
    """Vertex -> optional color in ``1..palette``; ``None`` marks an uncolored vertex."""

    palette: int
    assignment: tuple[int | None, ...]

    def __post_init__(self) -> None:
        for v, color in enumerate(self.assignment):
            if color is not None and not 1 <= color <= self.palette:
                raise ColoringError(
                    f"vertex {v} has color {color} outside 1..{self.palette}",
                    details={"vertex": v, "color": color},
                )

    @classmethod
    def empty(cls, n: int, palette: int) -> PartialColoring:
        return cls(palette, (None,) * n)

    @classmethod
    def total(cls, colors: Sequence[int], palette: int | None = None) -> PartialColoring:
        return cls(palette if palette is not None else max(colors, default=1), tuple(colors))

    def __len__(self) -> int:
        return len(self.assignment)

    def color(self, v: int) -> int | None:
        return self.assignment[v]

    def is_colored(self, v: int) -> bool:
        return self.assignment[v] is not None

    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def colored_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c is not None]

    def with_colors(self, updates: dict[int, int | None]) -> PartialColoring:
        values = list(self.assignment)
        for v, color in updates.items():
            values[v] = color
        return PartialColoring(self.palette, tuple(values))

    def restrict_away(self, vertices: Iterable[int]) -> PartialColoring:
        """Uncolor the given vertices."""
        return self.with_colors({v: None for v in vertices})

    def as_list(self) -> list[int]:
        """JSON form of a total coloring (index = vertex id)."""
        if not self.is_total():
            raise ColoringError("only total colorings serialise to integer arrays")
        return [int(c) for c in self.assignment if c is not None]


class OddColor(NamedTuple):
    color: int
    unique: bool


def neighbor_multiplicities(
    graph: Graph, assignment: Sequence[int | None], v: int
) -> Counter[int]:
    return Counter(c for u in graph.adj[v] if (c := assignment[u]) is not None)


def pcf_color_in(counts: Counter[int]) -> int | None:
    once = [c for c, k in counts.items() if k == 1]
    return min(once) if once else None


def odd_color_in(counts: Counter[int]) -> OddColor | None:
    odd = sorted(c for c, k in counts.items() if k % 2 == 1)
    if not odd:
        return None
    return OddColor(odd[0], len(odd) == 1)


def pcf_color_of(graph: Graph, coloring: PartialColoring, v: int) -> int | None:
    """Least color seen exactly once among the colored neighbors of ``v``."""
    return pcf_color_in(neighbor_multiplicities(graph, coloring.assignment, v))


def odd_color_of(graph: Graph, coloring: PartialColoring, v: int) -> OddColor | None:
    """Least color of odd multiplicity among colored neighbors, flagged unique or not."""
    return odd_color_in(neighbor_multiplicities(graph, coloring.assignment, v))
