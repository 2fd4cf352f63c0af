"""Logging helpers for oddcolor-lab.

Reports go to stdout, so every handler configured here writes to stderr (or a file).
"""

import asyncio
import functools
import json
import logging
import sys
import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Any, TextIO, TypeVar, cast

# LogRecord attributes that may be attached through ``extra=`` and carried into JSON output.
CONTEXT_FIELDS = ("campaign", "graph6", "index", "ruleset", "elapsed_ms")

TEXT_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"

# verbosity count -> level; ``-v`` steps down from the default, ``-q`` up
_VERBOSE_LEVELS = {1: "INFO", 2: "DEBUG"}
_QUIET_LEVELS = {1: "ERROR", 2: "CRITICAL"}


class JSONFormatter(logging.Formatter):
    """One JSON object per record, context fields included when set."""

    def format(self, record: logging.LogRecord) -> str:
        entry: dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        entry.update(
            (name, getattr(record, name))
            for name in CONTEXT_FIELDS
            if getattr(record, name, None) is not None
        )
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str)


def resolve_log_level(
    *,
    default_level: str = "WARNING",
    explicit_level: str | None = None,
    verbose: int = 0,
    quiet: int = 0,
) -> str:
    """``--log-level`` wins, then ``-v``/``-vv``, then ``-q``/``-qq``, then the default."""
    if explicit_level:
        return explicit_level.upper()
    if verbose:
        return _VERBOSE_LEVELS[min(verbose, 2)]
    if quiet:
        return _QUIET_LEVELS[min(quiet, 2)]
    return default_level.upper()


def setup_logging(
    level: str = "WARNING",
    format_json: bool = False,
    log_file: str | None = None,
    stream: TextIO | None = None,
) -> None:
    """Replace the root handlers with a stderr (or ``stream``) handler and an optional file."""
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        numeric = logging.WARNING

    formatter = JSONFormatter() if format_json else logging.Formatter(TEXT_FORMAT)
    handlers: list[logging.Handler] = [logging.StreamHandler(stream or sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    root = logging.getLogger()
    for old in list(root.handlers):
        root.removeHandler(old)
    root.setLevel(numeric)
    for handler in handlers:
        handler.setLevel(numeric)
        handler.setFormatter(formatter)
        root.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


F = TypeVar("F", bound=Callable[..., Any])


@contextmanager
def _timed(logger: logging.Logger, operation: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    except Exception:
        elapsed = round((time.perf_counter() - start) * 1000, 1)
        logger.error("%s failed after %.1f ms", operation, elapsed, extra={"elapsed_ms": elapsed})
        raise
    elapsed = round((time.perf_counter() - start) * 1000, 1)
    logger.info("%s completed in %.1f ms", operation, elapsed, extra={"elapsed_ms": elapsed})


def log_performance(logger: logging.Logger, operation: str) -> Callable[[F], F]:
    """Log the wall-clock time of each call at INFO, and failures at ERROR."""

    def decorator(func: F) -> F:
        if asyncio.iscoroutinefunction(func):

            @functools.wraps(func)
            async def run_async(*args: Any, **kwargs: Any) -> Any:
                with _timed(logger, operation):
                    return await func(*args, **kwargs)

            return cast(F, run_async)

        @functools.wraps(func)
        def run(*args: Any, **kwargs: Any) -> Any:
            with _timed(logger, operation):
                return func(*args, **kwargs)

        return cast(F, run)

    return decorator
