"""Exception hierarchy; every error carries a stable ``code`` for JSON responses."""

from __future__ import annotations

from typing import Any


class OddColorLabError(Exception):
    """Base exception for oddcolor-lab."""

    default_code = "UNKNOWN_ERROR"

    def __init__(self, message: str, code: str | None = None, details: Any | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.code = code or self.default_code
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.details is not None:
            payload["details"] = self.details
        return payload


class GraphFormatError(OddColorLabError):
    """Malformed graph6, planegraph or family text; ``line`` is 1-based when known."""

    default_code = "PARSE_ERROR"

    def __init__(self, message: str, line: int | None = None, details: Any | None = None) -> None:
        super().__init__(message, details=details)
        self.line = line

    def to_dict(self) -> dict[str, Any]:
        payload = super().to_dict()
        if self.line is not None:
            payload["line"] = self.line
        return payload


class InvalidGraphError(OddColorLabError):
    """Loops, duplicate edges, out-of-range vertices or faces that do not match the edges."""

    default_code = "INVALID_GRAPH"


class InputKindError(OddColorLabError):
    default_code = "INPUT_KIND_MISMATCH"

    def __init__(self, expected: str, received: str) -> None:
        super().__init__(
            f"Expected {expected} input, received {received}",
            details={"expected": expected, "received": received},
        )


class _OperationError(OddColorLabError):
    """Error raised from inside a named construction; the name prefixes the message."""

    def __init__(self, operation: str, message: str, details: Any | None = None) -> None:
        super().__init__(f"{operation}: {message}", details=details)
        self.operation = operation


class PreconditionError(_OperationError):
    default_code = "PRECONDITION_FAILED"


class InconsistencyAlarm(_OperationError):
    """A construction reached a state its correctness argument rules out."""

    default_code = "INTERNAL_INCONSISTENCY"


class ColoringError(OddColorLabError):
    """Partial coloring given to a total check, or colors outside ``1..c``."""

    default_code = "INVALID_COLORING"


class InstanceTooLargeError(OddColorLabError):
    default_code = "INSTANCE_TOO_LARGE"

    def __init__(self, operation: str, size: int, limit: int) -> None:
        super().__init__(
            f"{operation}: instance size {size} exceeds limit {limit}",
            details={"size": size, "limit": limit},
        )


class SolverTimeout(OddColorLabError):
    default_code = "SOLVER_TIMEOUT"

    def __init__(self, budget_ms: int | None = None, nodes: int | None = None) -> None:
        super().__init__(
            "Solver time budget exceeded", details={"budget_ms": budget_ms, "nodes": nodes}
        )


class ConfigurationError(OddColorLabError):
    default_code = "CONFIG_ERROR"


class InvalidParameterError(OddColorLabError):
    default_code = "INVALID_PARAMETER"

    def __init__(self, parameter: str, message: str, expected_type: str | None = None) -> None:
        details: dict[str, Any] = {"parameter": parameter}
        if expected_type:
            details["expected_type"] = expected_type
        super().__init__(f"Invalid parameter '{parameter}': {message}", details=details)
