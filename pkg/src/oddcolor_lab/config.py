"""Runtime configuration read from ``LOG_LEVEL`` and the ``ODDCOLOR_*`` variables."""

import os
from dataclasses import asdict, dataclass, replace
from typing import Any

from .exceptions import ConfigurationError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# field -> inclusive range accepted by validate(); None means unbounded above
_INT_RANGES: dict[str, tuple[int, int | None]] = {
    "budget_ms": (1, None),
    "jobs": (1, 64),
    "max_enum_vertices": (1, 9),
    "seed": (0, None),
}


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from exc


def _env_flag(name: str, default: bool) -> bool:
    raw = os.getenv(name, "").strip().lower()
    if not raw:
        return default
    return raw in ("1", "true", "yes", "on")


@dataclass
class Config:
    """Solver budget, worker count, enumeration cap, seed, cache switch and log level."""

    log_level: str = "WARNING"
    budget_ms: int = 10_000
    jobs: int = 1
    max_enum_vertices: int = 7
    seed: int = 0
    cache_results: bool = True

    @classmethod
    def from_env(cls) -> "Config":
        return cls(
            log_level=os.getenv("LOG_LEVEL", "WARNING").strip().upper(),
            budget_ms=_env_int("ODDCOLOR_BUDGET_MS", 10_000),
            jobs=_env_int("ODDCOLOR_JOBS", 1),
            max_enum_vertices=_env_int("ODDCOLOR_MAX_ENUM", 7),
            seed=_env_int("ODDCOLOR_SEED", 0),
            cache_results=_env_flag("ODDCOLOR_CACHE", True),
        )

    def validate(self) -> None:
        if self.log_level not in LOG_LEVELS:
            raise ConfigurationError(
                f"log_level must be one of {', '.join(LOG_LEVELS)}, got {self.log_level!r}"
            )
        for name, (low, high) in _INT_RANGES.items():
            value = getattr(self, name)
            if value < low or (high is not None and value > high):
                allowed = f"{low}..{high}" if high is not None else f">= {low}"
                raise ConfigurationError(
                    f"{name} must be {allowed}, got {value}",
                    details={"field": name, "value": value},
                )

    def with_overrides(self, **overrides: Any) -> "Config":
        """Validated copy with every non-None override applied."""
        updated = replace(self, **{k: v for k, v in overrides.items() if v is not None})
        updated.validate()
        return updated

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


_config: Config | None = None


def get_config() -> Config:
    """Process-wide configuration, read from the environment on first use."""
    global _config
    if _config is None:
        loaded = Config.from_env()
        loaded.validate()
        _config = loaded
    return _config


def set_config(config: Config) -> None:
    config.validate()
    global _config
    _config = config


def reset_config() -> None:
    global _config
    _config = None
