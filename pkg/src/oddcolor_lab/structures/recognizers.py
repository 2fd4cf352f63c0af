"""Recognizers for the extremal classes: bad structures (induced SK_{c+1}) and the 5-cycle class."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..exceptions import InvalidParameterError
from ..graphs import Graph, blocks
from ..logging_config import get_logger

logger = get_logger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True)
class BadStructureWitness:
    """Branch vertices of an induced SK_{c+1} and the 2-vertex subdividing each branch pair."""

    branch: tuple[int, ...]
    subdivision: dict[Pair, int]

    def to_dict(self) -> dict[str, Any]:
        return {
            "branch": list(self.branch),
            "subdivision": [[a, b, s] for (a, b), s in sorted(self.subdivision.items())],
        }


@dataclass(frozen=True)
class ClassHWitness:
    component: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.blocks)

    def to_dict(self) -> dict[str, Any]:
        return {"component": list(self.component), "blocks": [list(b) for b in self.blocks]}


def _pair_links(graph: Graph, candidates: set[int]) -> dict[Pair, int]:
    """Least 2-vertex joining each non-adjacent candidate pair."""
    links: dict[Pair, int] = {}
    for s in range(graph.n):
        if graph.degree(s) != 2:
            continue
        a, b = graph.adj[s]
        if a in candidates and b in candidates and not graph.has_edge(a, b):
            links.setdefault((a, b), s)
    return links


def _extend_clique(
    chosen: list[int],
    pool: list[int],
    linked: dict[int, set[int]],
    size: int,
) -> list[int] | None:
    if len(chosen) == size:
        return chosen
    for index, v in enumerate(pool):
        if len(chosen) + len(pool) - index < size:
            return None
        rest = [u for u in pool[index + 1 :] if u in linked[v]]
        found = _extend_clique([*chosen, v], rest, linked, size)
        if found is not None:
            return found
    return None


def find_bad_structure(graph: Graph, c: int) -> BadStructureWitness | None:
    """Induced SK_{c+1} whose subdivision vertices have degree 2 in the whole graph."""
    if c < 4:
        raise InvalidParameterError("c", f"bad structures are searched for c >= 4, got {c}")
    candidates = {v for v in range(graph.n) if graph.degree(v) >= c}
    if len(candidates) < c + 1:
        return None
    links = _pair_links(graph, candidates)
    linked: dict[int, set[int]] = {v: set() for v in candidates}
    for a, b in links:
        linked[a].add(b)
        linked[b].add(a)
    pool = sorted(v for v in candidates if len(linked[v]) >= c)
    branch = _extend_clique([], pool, linked, c + 1)
    if branch is None:
        return None
    subdivision = {
        (a, b): links[(a, b)] for i, a in enumerate(branch) for b in branch[i + 1 :]
    }
    logger.debug("bad structure for c=%d on branch %s", c, branch)
    return BadStructureWitness(branch=tuple(branch), subdivision=subdivision)


def validate_bad_structure(graph: Graph, witness: BadStructureWitness, c: int) -> bool:
    """Re-check a witness against the definition, independently of the search."""
    branch = witness.branch
    if len(set(branch)) != c + 1:
        return False
    pairs = {(a, b) for i, a in enumerate(sorted(branch)) for b in sorted(branch)[i + 1 :]}
    if set(witness.subdivision) != pairs:
        return False
    subs = list(witness.subdivision.values())
    if len(set(subs)) != len(subs) or set(subs) & set(branch):
        return False
    for (a, b), s in witness.subdivision.items():
        if graph.degree(s) != 2 or set(graph.adj[s]) != {a, b}:
            return False
    members = [*branch, *subs]
    return graph.induced_edge_count(members) == 2 * len(subs)


def _is_five_cycle(graph: Graph, block: tuple[int, ...]) -> bool:
    return len(block) == 5 and graph.induced_edge_count(block) == 5


def in_class_H(graph: Graph) -> ClassHWitness | None:
    """First component (by least vertex) that has an edge and whose every block is a 5-cycle."""
    decomposition = blocks(graph)
    for component in graph.components():
        if len(component) < 2:
            continue
        members = set(component)
        own = tuple(b for b in decomposition.blocks if b[0] in members)
        if own and all(_is_five_cycle(graph, b) for b in own):
            return ClassHWitness(component=component, blocks=own)
    return None


def validate_class_H(graph: Graph, witness: ClassHWitness) -> bool:
    members = set(witness.component)
    if not witness.blocks or not members:
        return False
    if any(u not in members for v in members for u in graph.adj[v]):
        return False
    covered = {v for b in witness.blocks for v in b}
    edges = sum(graph.induced_edge_count(b) for b in witness.blocks)
    return (
        covered == members
        and all(_is_five_cycle(graph, b) for b in witness.blocks)
        and edges == graph.induced_edge_count(members)
    )
