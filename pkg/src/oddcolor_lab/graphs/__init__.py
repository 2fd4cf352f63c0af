"""Graph representation, interchange formats and structural primitives."""

from .core import (
    Edge,
    Graph,
    Multigraph,
    complete_graph,
    complete_multigraph,
    cycle_graph,
    empty_graph,
    from_edges,
    path_graph,
    subdivide,
)
from .fixtures import PLANE_FIXTURES, plane_fixture, subdivide_plane
from .graph6 import from_networkx, iter_graph6, parse_graph6, to_networkx, write_graph6
from .plane import PlaneGraph, hypothesis_planar_odd6, parse_plane_graph, write_plane_graph
from .structure import (
    AdjacencyCounts,
    BlockDecomposition,
    Cycle,
    Thread,
    ThreadDecomposition,
    blocks,
    canonical_cycle,
    cycles_edge_adjacent,
    cycles_vertex_adjacent,
    girth,
    short_cycles,
    small_cycle_adjacencies,
    threads,
)

__all__ = [
    "AdjacencyCounts",
    "BlockDecomposition",
    "Cycle",
    "Edge",
    "Graph",
    "Multigraph",
    "PLANE_FIXTURES",
    "PlaneGraph",
    "Thread",
    "ThreadDecomposition",
    "blocks",
    "canonical_cycle",
    "complete_graph",
    "complete_multigraph",
    "cycle_graph",
    "cycles_edge_adjacent",
    "cycles_vertex_adjacent",
    "empty_graph",
    "from_edges",
    "from_networkx",
    "girth",
    "hypothesis_planar_odd6",
    "iter_graph6",
    "parse_graph6",
    "parse_plane_graph",
    "path_graph",
    "plane_fixture",
    "short_cycles",
    "small_cycle_adjacencies",
    "subdivide",
    "subdivide_plane",
    "threads",
    "to_networkx",
    "write_graph6",
    "write_plane_graph",
]
