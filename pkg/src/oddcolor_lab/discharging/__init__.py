"""Charge bookkeeping for the discharging arguments."""

from .ledger import ChargeLedger, ChargeViolation, Entity, Transfer, audit, face, vertex
from .rules import RuleSet, classify_faces, initial_charges, run_rules

__all__ = [
    "ChargeLedger",
    "ChargeViolation",
    "Entity",
    "RuleSet",
    "Transfer",
    "audit",
    "classify_faces",
    "face",
    "initial_charges",
    "run_rules",
    "vertex",
]
