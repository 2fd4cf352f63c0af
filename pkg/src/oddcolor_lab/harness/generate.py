"""Build a family member and serialize it."""

from __future__ import annotations

from typing import Any

from ..density import mad_exact
from ..exceptions import InvalidParameterError, OddColorLabError
from ..generators import generate, parse_family
from ..graphs import PlaneGraph, write_graph6, write_plane_graph
from ..logging_config import get_logger
from ..utils import format_error_response, fraction_to_str
from ..validators import GenerateRequest, validate_request

logger = get_logger(__name__)


def _generate_impl(request: GenerateRequest) -> dict[str, Any]:
    spec = parse_family(request.family)
    built = generate(request.family)
    graph = built.graph if isinstance(built, PlaneGraph) else built
    result: dict[str, Any] = {**spec.to_dict(), "n": graph.n, "m": graph.m}
    if request.format == "planegraph":
        if not isinstance(built, PlaneGraph):
            raise InvalidParameterError(
                "format", f"{spec.text} has no embedding; planegraph output needs a plane: family"
            )
        result["planegraph"] = write_plane_graph(built)
    else:
        result["graph6"] = write_graph6(graph)
    if request.format == "json":
        result["edges"] = [list(edge) for edge in graph.edges()]
        result["mad"] = fraction_to_str(mad_exact(graph))
        if isinstance(built, PlaneGraph):
            result["faces"] = [list(walk) for walk in built.faces]
    return result


def cmd_generate(data: dict[str, Any]) -> dict[str, Any]:
    """Family member as graph6, planegraph text or a JSON edge list."""
    try:
        request = validate_request(GenerateRequest, data)
    except InvalidParameterError as exc:
        return {"error": format_error_response(exc)}

    try:
        return _generate_impl(request)
    except OddColorLabError as exc:
        logger.error("generate failed: %s", exc.message)
        return {"error": format_error_response(exc)}
    except Exception as exc:  # pragma: no cover
        logger.exception("Unexpected error while generating a graph")
        return {"error": format_error_response(exc)}
