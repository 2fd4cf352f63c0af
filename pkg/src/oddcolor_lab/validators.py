"""Input validation models using Pydantic for the CLI and the tool server."""

from __future__ import annotations

from typing import Annotated, Any, Literal, TypeVar

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .constants import AuditScope, RuleSetId, TheoremContext, TheoremId
from .exceptions import InvalidParameterError

QUANTITIES = (
    "mad",
    "chi",
    "chi_odd",
    "chi_pcf",
    "girth",
    "bad_structure",
    "class_H",
    "findings",
    "discharge",
    "girth_corollary",
)
DEFAULT_QUANTITIES = ("mad", "chi_odd", "chi_pcf", "girth", "bad_structure", "class_H")

Palette = Annotated[int, Field(ge=1, le=64)]
BudgetMs = Annotated[int, Field(ge=1, le=3_600_000)]
RationalText = Annotated[str, Field(min_length=1, max_length=64, pattern=r"^-?\d+(?:/\d+)?$")]

T = TypeVar("T", bound=BaseModel)


def _member_of(enum: Any, value: str | None, what: str) -> str | None:
    if value is None:
        return value
    valid = sorted(item.value for item in enum)
    if value not in valid:
        raise ValueError(f"Invalid {what}: {value}. Must be one of {valid}")
    return value


class GraphSourceRequest(BaseModel):
    """Exactly one way of naming the input graph."""

    graph6: str | None = Field(None, min_length=1)
    family: str | None = Field(None, min_length=1)
    plane: str | None = Field(None, min_length=1)
    plane_fixture: str | None = Field(None, min_length=1)

    @model_validator(mode="after")
    def exactly_one_source(self) -> GraphSourceRequest:
        given = [
            value
            for value in (self.graph6, self.family, self.plane, self.plane_fixture)
            if value is not None
        ]
        if len(given) != 1:
            raise ValueError("exactly one of graph6, family, plane or plane_fixture is required")
        return self


class QueryRequest(GraphSourceRequest):
    """Request model for per-graph queries."""

    quantities: list[str] = Field(default_factory=lambda: list(DEFAULT_QUANTITIES))
    c: Palette = Field(5)
    context: str | None = Field(None)
    rules: str | None = Field(None)
    girth_corollary: int | None = Field(None, ge=5, le=64)
    budget_ms: BudgetMs | None = Field(None)

    @field_validator("quantities")
    @classmethod
    def validate_quantities(cls, v: list[str]) -> list[str]:
        unknown = [q for q in v if q not in QUANTITIES]
        if unknown:
            raise ValueError(f"Invalid quantities: {unknown}. Must be among {list(QUANTITIES)}")
        return v

    @field_validator("context")
    @classmethod
    def validate_context(cls, v: str | None) -> str | None:
        return _member_of(TheoremContext, v, "context")

    @field_validator("rules")
    @classmethod
    def validate_rules(cls, v: str | None) -> str | None:
        return _member_of(RuleSetId, v, "rule set")


class VerifyRequest(BaseModel):
    """Request model for theorem-verification campaigns."""

    theorem: str
    corpus: list[str] | None = Field(None)
    c: Palette | None = Field(None)
    count: int = Field(100, ge=1, le=100_000)
    seed: int | None = Field(None, ge=0)
    jobs: int | None = Field(None, ge=1, le=64)
    budget_ms: BudgetMs | None = Field(None)
    max_n: int | None = Field(None, ge=1, le=9)

    @field_validator("theorem")
    @classmethod
    def validate_theorem(cls, v: str) -> str:
        checked = _member_of(TheoremId, v, "theorem")
        assert checked is not None
        return checked


class DischargeRequest(GraphSourceRequest):
    """Request model for running and auditing a discharging rule set."""

    rules: str
    c: Palette | None = Field(None)
    epsilon: RationalText | None = Field(None)
    bound: RationalText | None = Field(None)
    scope: str = Field(AuditScope.ALL.value)
    include_transfers: bool = Field(True)

    @field_validator("rules")
    @classmethod
    def validate_rules(cls, v: str) -> str:
        checked = _member_of(RuleSetId, v, "rule set")
        assert checked is not None
        return checked

    @field_validator("scope")
    @classmethod
    def validate_scope(cls, v: str) -> str:
        checked = _member_of(AuditScope, v, "audit scope")
        assert checked is not None
        return checked


class GenerateRequest(BaseModel):
    """Request model for building a family member."""

    family: str = Field(..., min_length=1, max_length=256)
    format: Literal["graph6", "planegraph", "json"] = Field("graph6")


def validate_request(request_class: type[T], data: dict[str, Any]) -> T:
    """
    Validate request data using a Pydantic model.

    Args:
        request_class: The Pydantic model class to use for validation
        data: The data to validate

    Returns:
        Validated model instance

    Raises:
        InvalidParameterError: If validation fails
    """
    try:
        return request_class(**data)
    except ValidationError as e:
        errors = e.errors()
        if errors:
            first_error = errors[0]
            loc = first_error.get("loc", ())
            field_name = str(loc[0]) if loc else "request"
            msg = first_error.get("msg", "Validation error")
            raise InvalidParameterError(
                field_name, f"Validation error for field '{field_name}': {msg}"
            ) from e
        raise InvalidParameterError("request", str(e)) from e
    except Exception as e:
        raise InvalidParameterError("request", str(e)) from e
