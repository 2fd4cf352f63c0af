"""Thread-safe memo of expensive per-graph results (chromatic numbers, mad)."""

from __future__ import annotations

import threading
from collections.abc import Callable
from typing import Any

from .logging_config import get_logger

logger = get_logger(__name__)

CacheKey = tuple[str, str]


class ResultCache:
    """Results keyed by ``(graph6, quantity)``; quantities embed their parameters."""

    def __init__(self, max_entries: int = 4096) -> None:
        self._results: dict[CacheKey, Any] = {}
        self._lock = threading.Lock()
        self._max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, graph6: str, quantity: str, compute: Callable[[], Any]) -> Any:
        """Cached value, or ``compute()`` stored under the key.

        The computation runs outside the lock; two racing callers may both compute, and the
        first stored value wins.
        """
        key = (graph6, quantity)
        with self._lock:
            if key in self._results:
                self.hits += 1
                logger.debug("cache hit for %s on %s", quantity, graph6)
                return self._results[key]
            self.misses += 1
        value = compute()
        with self._lock:
            if len(self._results) >= self._max_entries:
                # oldest insertion goes first
                self._results.pop(next(iter(self._results)))
            return self._results.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._results.clear()
            self.hits = 0
            self.misses = 0

    def stats(self) -> dict[str, int]:
        with self._lock:
            return {"entries": len(self._results), "hits": self.hits, "misses": self.misses}


_result_cache: ResultCache | None = None
_cache_lock = threading.Lock()


def get_result_cache() -> ResultCache:
    """Get the global result cache instance."""
    global _result_cache
    if _result_cache is None:
        with _cache_lock:
            if _result_cache is None:
                _result_cache = ResultCache()
    return _result_cache
