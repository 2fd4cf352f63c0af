"""Coloring semantics, exact solvers and constructive extensions."""

from .extensions import (
    ExtensionResult,
    ExtensionStep,
    color_subdivided,
    extend_lemma_semi_odd,
    extend_lemma_semi_pcf,
    extend_lemma_semi_pcf_deg3,
)
from .partial import (
    OddColor,
    PartialColoring,
    neighbor_multiplicities,
    odd_color_of,
    pcf_color_of,
)
from .solver import TOTAL_MODES, brute_oracle, chi, minimum_coloring, solve, solve_semi
from .verify import ColorVerdict, Violation, verify, verify_semi_odd, verify_semi_pcf

__all__ = [
    "ColorVerdict",
    "ExtensionResult",
    "ExtensionStep",
    "OddColor",
    "PartialColoring",
    "TOTAL_MODES",
    "Violation",
    "brute_oracle",
    "chi",
    "color_subdivided",
    "extend_lemma_semi_odd",
    "extend_lemma_semi_pcf",
    "extend_lemma_semi_pcf_deg3",
    "minimum_coloring",
    "neighbor_multiplicities",
    "odd_color_of",
    "pcf_color_of",
    "solve",
    "solve_semi",
    "verify",
    "verify_semi_odd",
    "verify_semi_pcf",
]
