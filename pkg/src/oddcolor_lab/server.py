"""MCP stdio server exposing graph queries, campaigns, discharge reports and generators."""

import asyncio
import json
from collections.abc import Callable
from typing import Any

import mcp.server.stdio
import mcp.types as types
from mcp.server import NotificationOptions, Server

from . import __version__
from .harness import cmd_discharge, cmd_generate, cmd_query, cmd_verify_theorem
from .logging_config import get_logger
from .validators import QUANTITIES

logger = get_logger(__name__)

server = Server("oddcolor-lab")


def _field(kind: str, description: str, **extra: Any) -> dict[str, Any]:
    return {"type": kind, "description": description, **extra}


def _object(required: tuple[str, ...] = (), **properties: dict[str, Any]) -> dict[str, Any]:
    schema: dict[str, Any] = {"type": "object", "properties": properties}
    if required:
        schema["required"] = list(required)
    return schema


_SOURCE = {
    "graph6": _field("string", "Graph in graph6 format"),
    "family": _field("string", "Family spec such as sk:6, ht:1,1,3, rand:10:22/9:42 or plane:cube"),
    "plane": _field("string", "Path of a planegraph (.pg) file"),
    "plane_fixture": _field("string", "Name of a built-in plane fixture"),
}

TOOL_DEFS = [
    (
        "oc_query",
        "Compute mad, chromatic numbers, class memberships, detector findings or a discharge "
        "summary for one graph",
        _object(
            **_SOURCE,
            quantities=_field(
                "array",
                "Quantities to compute",
                items={"type": "string", "enum": list(QUANTITIES)},
            ),
            c=_field("integer", "Palette size (defaults to 5)"),
            context=_field("string", "Detector context: pcf, odd-mad, odd4 or planar6"),
            rules=_field("string", "Rule set for the discharge summary"),
            girth_corollary=_field("integer", "Palette size for the girth corollary check"),
            budget_ms=_field("integer", "Solver budget per search"),
        ),
    ),
    (
        "oc_verify_theorem",
        "Run a theorem or lemma verification campaign and report counterexamples",
        _object(
            ("theorem",),
            theorem=_field(
                "string",
                "thm-odd4, thm-pcf, thm-odd-mad, thm-planar6, lemma-pcf, lemma-pcf3 or lemma-odd",
            ),
            corpus=_field(
                "array",
                "Corpus specs (enum:<n>, plane:all, file:<path>, families)",
                items={"type": "string"},
            ),
            c=_field("integer", "Palette size where the theorem has one"),
            count=_field("integer", "Lemma instances to generate"),
            seed=_field("integer", "Seed for lemma instances"),
            jobs=_field("integer", "Worker processes"),
            budget_ms=_field("integer", "Solver budget per graph"),
            max_n=_field("integer", "Cap on enumerated graph order"),
        ),
    ),
    (
        "oc_discharge",
        "Run a discharging rule set, audit the final charges and cross-check the detectors",
        _object(
            ("rules",),
            **_SOURCE,
            rules=_field("string", "odd4, pcf5, pcf6plus, oddb or planar6"),
            c=_field("integer", "Palette size for pcf6plus and oddb"),
            epsilon=_field("string", "Rational epsilon for oddb"),
            bound=_field("string", "Audit bound as p/q (defaults to the rule set's target)"),
            scope=_field("string", "vertices, faces or all"),
            include_transfers=_field("boolean", "Whether to list every transfer"),
        ),
    ),
    (
        "oc_generate",
        "Build a member of a graph family",
        _object(
            ("family",),
            family=_field("string", "Family spec"),
            format=_field("string", "graph6, planegraph or json"),
        ),
    ),
]

HANDLERS: dict[str, Callable[[dict[str, Any]], dict[str, Any]]] = {
    "oc_query": cmd_query,
    "oc_verify_theorem": cmd_verify_theorem,
    "oc_discharge": cmd_discharge,
    "oc_generate": cmd_generate,
}


@server.list_tools()  # type: ignore[misc, no-untyped-call]
async def handle_list_tools() -> list[types.Tool]:
    return [
        types.Tool(name=name, description=description, inputSchema=schema)
        for name, description, schema in TOOL_DEFS
    ]


@server.call_tool()  # type: ignore[misc]
async def handle_call_tool(
    name: str, arguments: dict[str, Any]
) -> list[types.TextContent | types.ImageContent | types.EmbeddedResource]:
    """Run the harness command behind ``name`` off the event loop; errors come back in-band."""
    handler = HANDLERS.get(name)
    if handler is None:
        raise ValueError(f"no tool named {name!r}; expected one of {sorted(HANDLERS)}")
    payload = dict(arguments or {})
    logger.info("tool %s called", name, extra={"campaign": payload.get("theorem")})
    result = await asyncio.to_thread(handler, payload)
    return [types.TextContent(type="text", text=json.dumps(result, indent=2))]


async def main() -> None:
    """Serve the tools over stdin/stdout until the client disconnects."""
    options = mcp.server.InitializationOptions(
        server_name="oddcolor-lab",
        server_version=__version__,
        capabilities=server.get_capabilities(
            notification_options=NotificationOptions(), experimental_capabilities={}
        ),
    )
    async with mcp.server.stdio.stdio_server() as (read_stream, write_stream):
        await server.run(read_stream, write_stream, options)


if __name__ == "__main__":
    asyncio.run(main())
