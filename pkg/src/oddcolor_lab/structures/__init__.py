"""Degree statistics, extremal-class recognizers and reducible-configuration detectors."""

from .recognizers import (
    BadStructureWitness,
    ClassHWitness,
    find_bad_structure,
    in_class_H,
    validate_bad_structure,
    validate_class_H,
)
from .reducible import (
    RULES,
    ConfigurationFinding,
    ReducibleRule,
    detect_reducible,
    rules_for,
    validate_finding,
)
from .stats import (
    DegStats,
    close_two_vertices,
    girth_threshold,
    is_easy,
    lemma_bound,
    neighbors_of_degree,
)

__all__ = [
    "BadStructureWitness",
    "ClassHWitness",
    "ConfigurationFinding",
    "DegStats",
    "RULES",
    "ReducibleRule",
    "close_two_vertices",
    "detect_reducible",
    "find_bad_structure",
    "girth_threshold",
    "in_class_H",
    "is_easy",
    "lemma_bound",
    "neighbors_of_degree",
    "rules_for",
    "validate_bad_structure",
    "validate_class_H",
    "validate_finding",
]
