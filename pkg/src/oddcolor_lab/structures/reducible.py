"""Detectors for the configurations a minimal counterexample cannot contain.

Each rule pairs a candidate enumerator with a structural check; a finding is a candidate that
passes the check, so ``validate_finding`` re-runs nothing but the check on the stored witness.
The checks are stated on graph structure only. Whether a configuration really is reducible
(colorable from a smaller graph) is a separate question answered by the solver in the tests.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from ..constants import LemmaKind, TheoremContext
from ..exceptions import InputKindError, InvalidParameterError
from ..graphs import Graph, PlaneGraph, ThreadDecomposition, blocks, threads
from ..logging_config import get_logger
from .stats import DegStats, is_easy, lemma_bound, neighbors_of_degree

logger = get_logger(__name__)

Witness = tuple[tuple[int, ...], tuple[int, ...]]

FIXED_PALETTE = {TheoremContext.ODD4: 4, TheoremContext.PLANAR_ODD6: 6}


@dataclass
class _Scope:
    graph: Graph
    plane: PlaneGraph | None
    c: int

    @cached_property
    def decomposition(self) -> ThreadDecomposition:
        return threads(self.graph)

    @cached_property
    def easy(self) -> frozenset[int]:
        return frozenset(v for v in range(self.graph.n) if is_easy(self.graph, v))

    def d(self, v: int) -> int:
        return self.graph.degree(v)


Check = Callable[[_Scope, tuple[int, ...], tuple[int, ...]], bool]


@dataclass(frozen=True)
class ReducibleRule:
    id: str
    contexts: frozenset[TheoremContext]
    description: str
    candidates: Callable[[_Scope], Iterable[Witness]] = field(repr=False)
    check: Check = field(repr=False)


@dataclass(frozen=True)
class ConfigurationFinding:
    rule: str
    context: TheoremContext
    vertices: tuple[int, ...]
    faces: tuple[int, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "rule": self.rule,
            "context": self.context.value,
            "vertices": list(self.vertices),
        }
        if self.faces:
            result["faces"] = list(self.faces)
        return result


# candidate enumerators


def _each_vertex(scope: _Scope) -> Iterator[Witness]:
    for v in range(scope.graph.n):
        yield (v,), ()


def _each_edge(scope: _Scope) -> Iterator[Witness]:
    for edge in scope.graph.edges():
        yield edge, ()


def _each_ordered_edge(scope: _Scope) -> Iterator[Witness]:
    for u, w in scope.graph.edges():
        yield (u, w), ()
        yield (w, u), ()


def _each_thread(scope: _Scope) -> Iterator[Witness]:
    for thread in scope.decomposition.threads:
        yield thread.vertices, ()


def _each_block(scope: _Scope) -> Iterator[Witness]:
    for block in blocks(scope.graph).blocks:
        yield block, ()


def _each_anchored_thread(scope: _Scope) -> Iterator[Witness]:
    """``(v, t1, t2, ...)`` for every thread end next to a 3+- or 1-vertex ``v``."""
    for thread in scope.decomposition.threads:
        if thread.anchors is None:
            continue
        for anchor in sorted(set(thread.anchors)):
            run = thread.end_at(anchor)
            if run is not None:
                yield (anchor, *run), ()


def _each_small_face(scope: _Scope) -> Iterator[Witness]:
    if scope.plane is None:
        return
    for f, walk in enumerate(scope.plane.faces):
        if len(walk) in (4, 5):
            yield tuple(walk), (f,)


# shared predicates


def _is_path_of_twos(graph: Graph, run: tuple[int, ...]) -> bool:
    if len(set(run)) != len(run) or any(graph.degree(u) != 2 for u in run):
        return False
    return all(graph.has_edge(a, b) for a, b in zip(run, run[1:]))


def _two_thread_ends(scope: _Scope, v: int, length: int) -> int:
    """Neighbors of ``v`` that start a thread with at least ``length`` vertices."""
    count = 0
    for u in scope.graph.adj[v]:
        thread = scope.decomposition.thread_of(u)
        if thread is not None and not thread.cyclic and thread.length >= length:
            count += 1
    return count


def _is_cycle_block(graph: Graph, block: tuple[int, ...], length: int) -> bool:
    if len(block) != length or graph.induced_edge_count(block) != length:
        return False
    members = set(block)
    return all(sum(u in members for u in graph.adj[v]) == 2 for v in block)


def _has_lemma_neighbor(graph: Graph, v: int, kind: LemmaKind) -> bool:
    if kind is LemmaKind.PCF:
        return bool(neighbors_of_degree(graph, v, 2, 2))
    if kind is LemmaKind.PCF3:
        return bool(neighbors_of_degree(graph, v, 2, 3))
    return graph.degree(v) % 2 == 1 or bool(neighbors_of_degree(graph, v, 1, 2))


def _residue_check(kind: LemmaKind) -> Check:
    def check(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
        (v,) = vertices
        if kind is LemmaKind.PCF3 and scope.c < 7:
            return False
        return _has_lemma_neighbor(scope.graph, v, kind) and (
            lemma_bound(scope.graph, v, kind) <= scope.c - 1
        )

    return check


# structural checks


def _one_vertex(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    return len(vertices) == 1 and scope.d(vertices[0]) == 1


def _adjacent_twos(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    u, w = vertices
    return scope.graph.has_edge(u, w) and scope.d(u) == 2 and scope.d(w) == 2


def _two_vertex_in_triangle(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    (x,) = vertices
    if scope.d(x) != 2:
        return False
    y, z = scope.graph.adj[x]
    return scope.graph.has_edge(y, z)


def _end_block_five_cycle(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    if not _is_cycle_block(scope.graph, vertices, 5):
        return False
    return sorted(scope.d(v) == 2 for v in vertices) == [False, True, True, True, True]


def _end_block_short_cycle(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    length = len(vertices)
    if length not in (3, 4) or not _is_cycle_block(scope.graph, vertices, length):
        return False
    return sum(scope.d(v) == 2 for v in vertices) >= length - 1


def _long_thread(minimum: int, *, exempt_cycle: int | None = None) -> Check:
    def check(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
        if len(vertices) < minimum or not _is_path_of_twos(scope.graph, vertices):
            return False
        # a run of 2-vertices whose ends meet is a whole cycle component
        closed = len(vertices) >= 3 and scope.graph.has_edge(vertices[0], vertices[-1])
        return not (closed and len(vertices) == exempt_cycle)

    return check


def _odd_vertex_two_thread(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    v, *run = vertices
    return (
        scope.d(v) % 2 == 1
        and len(run) >= 2
        and scope.graph.has_edge(v, run[0])
        and _is_path_of_twos(scope.graph, tuple(run))
    )


def _three_vertex_three_twos(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    (v,) = vertices
    return scope.d(v) == 3 and DegStats.of(scope.graph, v).n2 == 3


def _threads_around_two_neighbors(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    (v,) = vertices
    d = scope.d(v)
    if d < 4 or DegStats.of(scope.graph, v).n2 != d:
        return False
    return _two_thread_ends(scope, v, 2) > d - 2


def _threads_beside_three_thread(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    (v,) = vertices
    d = scope.d(v)
    if d < 4 or _two_thread_ends(scope, v, 3) == 0:
        return False
    others = _two_thread_ends(scope, v, 2) - 1
    n3plus = DegStats.of(scope.graph, v).n_at_least(3)
    return others > d - 4 + min(n3plus, 1)


def _too_many_close(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    (v,) = vertices
    d = scope.d(v)
    if d < 4:
        return False
    close = len(scope.decomposition.close_vertices(v))
    return close > d if d % 2 else close > 3 * d - 5


def _pcf_three_vertex(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    (v,) = vertices
    if scope.d(v) != 3:
        return False
    stats = DegStats.of(scope.graph, v)
    if stats.n2 == 0:
        return False
    return scope.c != 5 or stats.n2 != 1 or stats.n3 > 0


def _pcf_adjacent_pair(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    v1, v2 = vertices
    graph = scope.graph
    if not graph.has_edge(v1, v2) or scope.d(v1) < 3 or scope.d(v2) < 3:
        return False
    s1, s2 = DegStats.of(graph, v1), DegStats.of(graph, v2)
    if 2 * s1.degree - s1.n2 - 2 > scope.c - 1 or 2 * s2.degree - s2.n2 - 2 > scope.c - 2:
        return False
    return s1.degree == 3 or (s1.n2 > 0 and s2.n2 > 0)


def _odd_three_vertex(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    (v,) = vertices
    if scope.d(v) != 3:
        return False
    graph = scope.graph
    stats = DegStats.of(graph, v)
    non_easy_big = sum(
        1 for u in graph.adj[v] if graph.degree(u) >= 4 and u not in scope.easy
    )
    if not 5 <= scope.c <= 6 or non_easy_big < 2:
        return True
    return stats.n2 + stats.ne >= 1 and scope.c != 5


def _planar_three_vertex(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    (v,) = vertices
    if scope.d(v) != 3:
        return False
    return any(scope.d(u) == 2 or u in scope.easy for u in scope.graph.adj[v])


def _four_vertex_three_twos(
    scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]
) -> bool:
    (v,) = vertices
    return scope.d(v) == 4 and DegStats.of(scope.graph, v).n2 >= 3


def _adjacent_easy(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    u, w = vertices
    return scope.graph.has_edge(u, w) and u in scope.easy and w in scope.easy


def _crowded_small_face(scope: _Scope, vertices: tuple[int, ...], faces: tuple[int, ...]) -> bool:
    if scope.plane is None or len(faces) != 1:
        return False
    (f,) = faces
    walk = scope.plane.faces[f]
    if tuple(walk) != vertices or len(walk) not in (4, 5):
        return False
    on_face = set(walk)
    if not any(scope.d(v) == 2 for v in on_face):
        return False
    return sum(1 for v in on_face if scope.d(v) <= 3) >= 2


_ODD4 = frozenset({TheoremContext.ODD4})
_PCF = frozenset({TheoremContext.PCF_C})
_ODD_MAD = frozenset({TheoremContext.ODD_MAD_C})
_PLANAR = frozenset({TheoremContext.PLANAR_ODD6})

RULES: tuple[ReducibleRule, ...] = (
    ReducibleRule(
        "one-vertex",
        _ODD4 | _PCF | _ODD_MAD | _PLANAR,
        "a vertex of degree 1",
        _each_vertex,
        _one_vertex,
    ),
    ReducibleRule(
        "adjacent-two-vertices",
        _PCF | _ODD_MAD,
        "two adjacent 2-vertices",
        _each_edge,
        _adjacent_twos,
    ),
    ReducibleRule(
        "two-vertex-in-triangle",
        _PCF | _PLANAR,
        "a 2-vertex whose neighbors are adjacent",
        _each_vertex,
        _two_vertex_in_triangle,
    ),
    ReducibleRule(
        "end-block-five-cycle",
        _ODD4,
        "a 5-cycle end-block with four 2-vertices",
        _each_block,
        _end_block_five_cycle,
    ),
    ReducibleRule(
        "end-block-short-cycle",
        _ODD4,
        "a 3- or 4-cycle block whose vertices but one are 2-vertices",
        _each_block,
        _end_block_short_cycle,
    ),
    ReducibleRule(
        "four-thread",
        _ODD4,
        "a thread of at least four 2-vertices other than a whole 5-cycle",
        _each_thread,
        _long_thread(4, exempt_cycle=5),
    ),
    ReducibleRule(
        "odd-vertex-two-thread",
        _ODD4,
        "an odd-degree vertex next to a thread of at least two 2-vertices",
        _each_anchored_thread,
        _odd_vertex_two_thread,
    ),
    ReducibleRule(
        "three-vertex-three-twos",
        _ODD4,
        "a 3-vertex whose neighbors are all 2-vertices",
        _each_vertex,
        _three_vertex_three_twos,
    ),
    ReducibleRule(
        "two-threads-around-pure-vertex",
        _ODD4,
        "a 4+-vertex with only 2-neighbors starting more than d-2 2-threads",
        _each_vertex,
        _threads_around_two_neighbors,
    ),
    ReducibleRule(
        "two-threads-beside-three-thread",
        _ODD4,
        "a 4+-vertex on a 3-thread starting more than d-4+min(n3+,1) other 2-threads",
        _each_vertex,
        _threads_beside_three_thread,
    ),
    ReducibleRule(
        "too-many-close",
        _ODD4,
        "a 4+-vertex with more than d (odd d) or 3d-5 (even d) close 2-vertices",
        _each_vertex,
        _too_many_close,
    ),
    ReducibleRule(
        "pcf-three-vertex",
        _PCF,
        "a 3-vertex with a 2-neighbor unless c = 5, n2 = 1 and n3 = 0",
        _each_vertex,
        _pcf_three_vertex,
    ),
    ReducibleRule(
        "pcf-adjacent-pair",
        _PCF,
        "adjacent 3+-vertices with 2d-n2-2 at most c-1 and c-2, one a 3-vertex or both with "
        "2-neighbors",
        _each_ordered_edge,
        _pcf_adjacent_pair,
    ),
    ReducibleRule(
        "pcf-residue",
        _PCF,
        "a vertex with a 2-neighbor and 2d-2n1-n2 at most c-1",
        _each_vertex,
        _residue_check(LemmaKind.PCF),
    ),
    ReducibleRule(
        "pcf3-residue",
        _PCF,
        "for c >= 7, a vertex with a 2- or 3-neighbor and 2d-2n1-n2-n3 at most c-1",
        _each_vertex,
        _residue_check(LemmaKind.PCF3),
    ),
    ReducibleRule(
        "odd-three-vertex",
        _ODD_MAD,
        "a 3-vertex breaking c in 5..6, two non-easy 4+-neighbors, or c = 5 when n2+ne >= 1",
        _each_vertex,
        _odd_three_vertex,
    ),
    ReducibleRule(
        "odd-residue",
        _ODD_MAD | _PLANAR,
        "an odd-degree vertex or one with a 2--neighbor and 2d-2n1-n2-ne at most c-1",
        _each_vertex,
        _residue_check(LemmaKind.ODD),
    ),
    ReducibleRule(
        "two-thread",
        _PLANAR,
        "a thread of at least two 2-vertices",
        _each_thread,
        _long_thread(2),
    ),
    ReducibleRule(
        "three-vertex-small-neighbor",
        _PLANAR,
        "a 3-vertex with a 2-neighbor or an easy neighbor",
        _each_vertex,
        _planar_three_vertex,
    ),
    ReducibleRule(
        "four-vertex-three-twos",
        _PLANAR,
        "a 4-vertex with three 2-neighbors",
        _each_vertex,
        _four_vertex_three_twos,
    ),
    ReducibleRule(
        "adjacent-easy",
        _PLANAR,
        "two adjacent easy vertices",
        _each_edge,
        _adjacent_easy,
    ),
    ReducibleRule(
        "crowded-small-face",
        _PLANAR,
        "a 4- or 5-face with a 2-vertex and another 3--vertex",
        _each_small_face,
        _crowded_small_face,
    ),
)

RULES_BY_ID = {rule.id: rule for rule in RULES}


def rules_for(context: TheoremContext) -> list[ReducibleRule]:
    return [rule for rule in RULES if context in rule.contexts]


def _scope(source: Graph | PlaneGraph, context: TheoremContext, c: int | None) -> _Scope:
    if context is TheoremContext.PLANAR_ODD6 and not isinstance(source, PlaneGraph):
        raise InputKindError("PlaneGraph", type(source).__name__)
    fixed = FIXED_PALETTE.get(context)
    if fixed is not None:
        if c is not None and c != fixed:
            raise InvalidParameterError("c", f"context {context.value} fixes c = {fixed}, got {c}")
        c = fixed
    elif c is None:
        c = 5
    if context in (TheoremContext.PCF_C, TheoremContext.ODD_MAD_C) and c < 5:
        raise InvalidParameterError("c", f"context {context.value} needs c >= 5, got {c}")
    if isinstance(source, PlaneGraph):
        return _Scope(graph=source.graph, plane=source, c=c)
    return _Scope(graph=source, plane=None, c=c)


def detect_reducible(
    source: Graph | PlaneGraph, context: TheoremContext, c: int | None = None
) -> list[ConfigurationFinding]:
    """Every occurrence of every configuration the context rules out, in rule order.

    ``c`` is fixed to 4 for the odd 4-coloring context and 6 for the planar one; the PCF and
    odd-mad contexts default to 5.
    """
    scope = _scope(source, context, c)
    findings: list[ConfigurationFinding] = []
    for rule in rules_for(context):
        for vertices, faces in rule.candidates(scope):
            if rule.check(scope, vertices, faces):
                findings.append(ConfigurationFinding(rule.id, context, vertices, faces))
    logger.debug(
        "detect_reducible context=%s c=%d found %d configurations",
        context.value,
        scope.c,
        len(findings),
    )
    return findings


def validate_finding(
    source: Graph | PlaneGraph, finding: ConfigurationFinding, c: int | None = None
) -> bool:
    """Re-check a finding's witness against its rule's structural predicate."""
    rule = RULES_BY_ID.get(finding.rule)
    if rule is None or finding.context not in rule.contexts:
        return False
    scope = _scope(source, finding.context, c)
    if any(not 0 <= v < scope.graph.n for v in finding.vertices):
        return False
    return rule.check(scope, finding.vertices, finding.faces)
