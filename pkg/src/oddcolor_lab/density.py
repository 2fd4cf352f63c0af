"""Exact maximum average degree via densest-subgraph min-cuts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .constants import MAX_BRUTE_MAD_VERTICES
from .exceptions import InstanceTooLargeError, InvalidGraphError, InvalidParameterError
from .graphs import Graph
from .logging_config import get_logger, log_performance

logger = get_logger(__name__)

_SOURCE = "s"
_SINK = "t"


@dataclass(frozen=True)
class DensityCertificate:
    """A vertex set together with its exact edge density ``|E(H)| / |V(H)|``."""

    subgraph: frozenset[int]
    density: Fraction

    @classmethod
    def of(cls, graph: Graph, vertices: frozenset[int]) -> DensityCertificate:
        return cls(vertices, Fraction(graph.induced_edge_count(vertices), len(vertices)))


def _denser_subgraph(graph: Graph, threshold: Fraction) -> frozenset[int] | None:
    """Vertex set with density strictly above ``threshold``, or None.

    Edge-node network scaled by ``q`` for ``threshold = p/q``: source -> edge (q),
    edge -> endpoints (unbounded), vertex -> sink (p). A subgraph denser than p/q exists
    iff the min cut is below ``q * m``; its vertices are the source side of the cut.
    """
    p, q = threshold.numerator, threshold.denominator
    network = nx.DiGraph()
    network.add_node(_SOURCE)
    network.add_node(_SINK)
    for u, v in graph.edges():
        node = ("e", u, v)
        network.add_edge(_SOURCE, node, capacity=q)
        # no capacity attribute means unbounded to networkx
        network.add_edge(node, ("v", u))
        network.add_edge(node, ("v", v))
    for v in range(graph.n):
        network.add_edge(("v", v), _SINK, capacity=p)
    cut_value, (source_side, _) = nx.minimum_cut(network, _SOURCE, _SINK)
    if cut_value >= q * graph.m:
        return None
    chosen = frozenset(
        node[1] for node in source_side if isinstance(node, tuple) and node[0] == "v"
    )
    return chosen or None


@log_performance(logger, "densest_subgraph")
def densest_subgraph(graph: Graph) -> DensityCertificate:
    """Maximum-density vertex set by bisection over densities ``a/b`` with ``b <= n``."""
    if graph.n == 0:
        raise InvalidGraphError("densest subgraph of the empty graph is undefined")
    best = DensityCertificate.of(graph, frozenset(range(graph.n)))
    low = best.density
    high = Fraction(graph.n - 1, 2)
    gap = Fraction(1, graph.n * graph.n)
    steps = 0
    while high - low >= gap:
        steps += 1
        mid = (low + high) / 2
        denser = _denser_subgraph(graph, mid)
        if denser is None:
            high = mid
            continue
        best = DensityCertificate.of(graph, denser)
        low = best.density
    logger.debug("densest subgraph found after %d decisions: %s", steps, best.density)
    return best


def mad_exact(graph: Graph) -> Fraction:
    return 2 * densest_subgraph(graph).density


def mad_at_most(graph: Graph, bound: Fraction | int) -> bool:
    """Single decision flow: no subgraph has average degree above ``bound``."""
    bound = Fraction(bound)
    if bound < 0:
        raise InvalidParameterError("bound", f"must be non-negative, got {bound}")
    if graph.m == 0:
        return True
    return _denser_subgraph(graph, bound / 2) is None


def mad_brute(graph: Graph) -> Fraction:
    """Exhaustive oracle: induced edge counts of all subsets by incremental bitset updates."""
    n = graph.n
    if n == 0:
        raise InvalidGraphError("mad of the empty graph is undefined")
    if n > MAX_BRUTE_MAD_VERTICES:
        raise InstanceTooLargeError("mad_brute", n, MAX_BRUTE_MAD_VERTICES)
    masks = [graph.mask(v) for v in range(n)]
    edge_count = [0] * (1 << n)
    best_edges, best_size = 0, 1
    for subset in range(1, 1 << n):
        low = subset & -subset
        v = low.bit_length() - 1
        rest = subset ^ low
        edges = edge_count[rest] + (masks[v] & rest).bit_count()
        edge_count[subset] = edges
        size = subset.bit_count()
        if edges * best_size > best_edges * size:
            best_edges, best_size = edges, size
    return Fraction(2 * best_edges, best_size)
