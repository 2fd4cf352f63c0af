"""Deterministic constructors for the named graph families and seeded random corpora.

Random families draw from :class:`SeededStream`, the raw 64-bit output of ``numpy.random.PCG64``.
Bounded integers are taken by rejection sampling and shuffles are Fisher-Yates from the top
index down, so a seed yields the same graph on every platform and numpy release.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .constants import FAMILY_PATTERNS, MAX_RANDOM_VERTICES, MULTIGRAPH_PATTERNS
from .density import mad_at_most
from .exceptions import GraphFormatError, InvalidGraphError, InvalidParameterError
from .graphs import (
    Graph,
    Multigraph,
    PlaneGraph,
    complete_multigraph,
    cycle_graph,
    from_edges,
    plane_fixture,
    subdivide,
)
from .logging_config import get_logger
from .structures.recognizers import find_bad_structure, in_class_H

logger = get_logger(__name__)

_UINT64 = 1 << 64
_REGULAR_ATTEMPTS = 1000


class SeededStream:
    """Platform-independent integer stream over the raw PCG64 output."""

    def __init__(self, seed: int) -> None:
        if seed < 0:
            raise InvalidParameterError("seed", f"seed must be non-negative, got {seed}")
        self._bits = np.random.PCG64(seed)

    def next_u64(self) -> int:
        return int(self._bits.random_raw())

    def below(self, bound: int) -> int:
        """Uniform integer in ``0..bound-1``."""
        if bound < 1:
            raise InvalidParameterError("bound", f"bound must be positive, got {bound}")
        limit = _UINT64 - _UINT64 % bound
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def shuffle(self, items: list[Any]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_sk(n: int) -> Graph:
    """K_n with every edge subdivided once; branch vertices first."""
    if n < 2:
        raise InvalidParameterError("n", f"SK_n needs n >= 2, got {n}")
    return subdivide(complete_multigraph(n))


def gen_ht(attachments: list[int]) -> Graph:
    """Chain of 5-cycles; extra cycle i shares vertex ``attachments[i]`` with the graph so far."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    n = 5
    for index, anchor in enumerate(attachments):
        if not 0 <= anchor < n:
            raise InvalidParameterError(
                "attachments", f"attachment {index} names vertex {anchor}, graph has {n}"
            )
        ring = [anchor, n, n + 1, n + 2, n + 3]
        edges.extend((ring[i], ring[(i + 1) % 5]) for i in range(5))
        n += 4
    return from_edges(n, edges)


def gen_subdivided(multigraph: Multigraph) -> Graph:
    return subdivide(multigraph)


def gen_cycle(n: int) -> Graph:
    return cycle_graph(n)


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def gen_random_mad_bounded(
    n: int, bound: Fraction, seed: int, *, max_edges: int | None = None
) -> Graph:
    """Random graph with mad at most ``bound``: shuffled pairs, each kept if the bound survives."""
    if not 1 <= n <= MAX_RANDOM_VERTICES:
        raise InvalidParameterError("n", f"n must be within 1..{MAX_RANDOM_VERTICES}, got {n}")
    if bound < 0:
        raise InvalidParameterError("bound", f"mad bound must be non-negative, got {bound}")
    stream = SeededStream(seed)
    pairs = _all_pairs(n)
    stream.shuffle(pairs)
    kept: list[tuple[int, int]] = []
    for pair in pairs:
        if max_edges is not None and len(kept) >= max_edges:
            break
        candidate = from_edges(n, [*kept, pair])
        if mad_at_most(candidate, bound):
            kept.append(pair)
    logger.debug("rand n=%d bound=%s seed=%d kept %d edges", n, bound, seed, len(kept))
    return from_edges(n, kept)


def gen_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly ``m`` edges."""
    pairs = _all_pairs(n)
    if not 0 <= m <= len(pairs):
        raise InvalidParameterError("m", f"m must be within 0..{len(pairs)}, got {m}")
    stream = SeededStream(seed)
    stream.shuffle(pairs)
    return from_edges(n, pairs[:m])


def regular_multigraph(n: int, r: int, seed: int) -> Multigraph:
    """Random loopless r-regular multigraph by stub pairing, retrying on loops."""
    if n < 2 or r < 1 or (n * r) % 2:
        raise InvalidParameterError(
            "regmulti", f"no loopless {r}-regular multigraph on {n} vertices"
        )
    stream = SeededStream(seed)
    for _ in range(_REGULAR_ATTEMPTS):
        stubs = [v for v in range(n) for _ in range(r)]
        stream.shuffle(stubs)
        edges = list(zip(stubs[::2], stubs[1::2]))
        if all(u != v for u, v in edges):
            return Multigraph(n, tuple(edges))
    raise InvalidParameterError("regmulti", f"stub pairing kept producing loops for n={n}, r={r}")


def dipole(r: int) -> Multigraph:
    """Two vertices joined by ``r`` parallel edges."""
    return Multigraph(2, ((0, 1),) * r)


def gen_odd4_extremal(k: int) -> Graph:
    """Graph whose 4-vertices each anchor two 3-threads, one 1-thread and one direct 4-neighbor.

    The k branch vertices lie on a cycle of 3-threads; consecutive pairs (2j, 2j+1) are joined
    directly and pairs (2j+1, 2j+2) through a single 2-vertex.
    """
    if k < 2 or k % 2:
        raise InvalidParameterError("k", f"k must be an even integer >= 2, got {k}")
    edges: list[tuple[int, int]] = []
    n = k
    for i in range(k):
        a, b = i, (i + 1) % k
        edges.extend([(a, n), (n, n + 1), (n + 1, n + 2), (n + 2, b)])
        n += 3
    for j in range(k // 2):
        edges.append((2 * j, 2 * j + 1))
        edges.extend([(2 * j + 1, n), (n, (2 * j + 2) % k)])
        n += 1
    return from_edges(n, edges)


def parse_multigraph(text: str) -> Multigraph:
    """``reg<r>x2`` (dipole), ``reg<r>x<n>`` (seed 0), ``k<n>`` or ``regmulti:<n>:<r>:<seed>``."""
    if match := re.match(MULTIGRAPH_PATTERNS["reg"], text):
        r, n = int(match.group(1)), int(match.group(2))
        return dipole(r) if n == 2 else regular_multigraph(n, r, 0)
    if match := re.match(MULTIGRAPH_PATTERNS["complete"], text):
        return complete_multigraph(int(match.group(1)))
    if match := re.match(MULTIGRAPH_PATTERNS["regmulti"], text):
        n, r, seed = (int(g) for g in match.groups())
        return regular_multigraph(n, r, seed)
    raise GraphFormatError(f"unknown multigraph spec {text!r}")


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family string such as ``sk:6``, ``ht:1,1,3`` or ``rand:10:22/9:42``."""

    family: str
    params: tuple[Any, ...]
    text: str

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "spec": self.text}


def _parse_ht(body: str) -> tuple[int, ...]:
    if "," not in body:
        t = int(body)
        if t < 1:
            raise GraphFormatError(f"ht needs t >= 1, got {t}")
        return (0,) * (t - 1)
    return tuple(int(part) for part in body.split(",") if part != "")


def parse_family(text: str) -> FamilySpec:
    spec = text.strip()
    for family, pattern in FAMILY_PATTERNS.items():
        match = re.match(pattern, spec)
        if match is None:
            continue
        groups = match.groups()
        params: tuple[Any, ...]
        if family == "ht":
            params = _parse_ht(groups[0])
        elif family == "rand":
            params = (int(groups[0]), Fraction(groups[1]), int(groups[2]))
        elif family in ("subdiv", "plane"):
            params = (groups[0],)
        else:
            params = tuple(int(g) for g in groups)
        return FamilySpec(family=family, params=params, text=spec)
    raise GraphFormatError(
        f"unrecognized family spec {text!r}",
        details={"known": sorted(FAMILY_PATTERNS)},
    )


def build_family(spec: FamilySpec) -> Graph | PlaneGraph:
    """Construct the graph a family spec names; ``plane:`` specs yield plane graphs."""
    family, params = spec.family, spec.params
    if family == "sk":
        return gen_sk(params[0])
    if family == "ht":
        return gen_ht(list(params))
    if family == "cycle":
        return gen_cycle(params[0])
    if family == "rand":
        n, bound, seed = params
        return gen_random_mad_bounded(n, bound, seed)
    if family == "gnm":
        return gen_gnm(*params)
    if family == "subdiv":
        return gen_subdivided(parse_multigraph(params[0]))
    if family == "odd4x":
        return gen_odd4_extremal(params[0])
    if family == "plane":
        return plane_fixture(params[0])
    raise InvalidParameterError("family", f"no constructor for {family!r}")


def generate(text: str) -> Graph | PlaneGraph:
    spec = parse_family(text)
    built = build_family(spec)
    graph = built.graph if isinstance(built, PlaneGraph) else built
    if not family_predicate(spec, graph):
        raise InvalidGraphError(f"{spec.text} failed its family predicate")
    return built


def family_predicate(spec: FamilySpec, graph: Graph) -> bool:
    """Defining property of the family, re-checked on a constructed graph."""
    family, params = spec.family, spec.params
    if family == "sk":
        n = params[0]
        branch_ok = all(graph.degree(v) == n - 1 for v in range(n))
        subdivision_ok = all(graph.degree(v) == 2 for v in range(n, graph.n))
        if n - 1 >= 4:
            return branch_ok and subdivision_ok and find_bad_structure(graph, n - 1) is not None
        return branch_ok and subdivision_ok and graph.n == n + n * (n - 1) // 2
    if family == "ht":
        witness = in_class_H(graph)
        return graph.is_connected() and witness is not None and witness.t == len(params) + 1
    if family == "cycle":
        return graph.is_connected() and all(d == 2 for d in graph.degrees)
    if family == "rand":
        return mad_at_most(graph, params[1])
    if family == "gnm":
        return graph.m == params[1]
    if family == "subdiv":
        base = parse_multigraph(params[0])
        return graph.n == base.n + len(base.edges) and all(
            graph.degree(v) == base.degree(v) for v in range(base.n)
        ) and all(graph.degree(v) == 2 for v in range(base.n, graph.n))
    if family == "odd4x":
        k = params[0]
        return all(graph.degree(v) == 4 for v in range(k)) and all(
            graph.degree(v) == 2 for v in range(k, graph.n)
        )
    return True
