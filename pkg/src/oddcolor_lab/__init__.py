"""oddcolor-lab - exact tools for odd and proper conflict-free colorings of sparse graphs."""

__version__ = "0.1.0"

from .density import mad_exact
from .graphs import Graph, PlaneGraph, parse_graph6, write_graph6
from .harness import cmd_discharge, cmd_generate, cmd_query, cmd_verify_theorem

__all__ = [
    "Graph",
    "PlaneGraph",
    "cmd_discharge",
    "cmd_generate",
    "cmd_query",
    "cmd_verify_theorem",
    "mad_exact",
    "parse_graph6",
    "write_graph6",
    "__version__",
]
