"""Named discharging rule sets and their application to a graph or plane graph."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from ..constants import ODD4_MAD_BOUND, RuleSetId
from ..exceptions import InputKindError, InvalidParameterError
from ..graphs import Graph, PlaneGraph, threads
from ..graphs.plane import walk_edges
from ..logging_config import get_logger
from ..structures.stats import DegStats, is_easy
from .ledger import ChargeLedger, face, vertex

logger = get_logger(__name__)

FaceClass = Literal["bad", "good"]


@dataclass(frozen=True)
class RuleSet:
    """A rule set with its parameters as exact rationals."""

    id: RuleSetId
    c: int | None = None
    epsilon: Fraction | None = None

    @classmethod
    def odd4(cls) -> RuleSet:
        return cls(RuleSetId.ODD4_TWO_NINTHS)

    @classmethod
    def pcf_c5(cls) -> RuleSet:
        return cls(RuleSetId.PCF_C5, c=5)

    @classmethod
    def pcf_c6plus(cls, c: int) -> RuleSet:
        if c < 6:
            raise InvalidParameterError("c", f"pcf6plus rules need c >= 6, got {c}")
        return cls(RuleSetId.PCF_C6PLUS, c=c)

    @classmethod
    def odd_app_b(cls, c: int, epsilon: Fraction | None = None) -> RuleSet:
        if c < 5:
            raise InvalidParameterError("c", f"oddb rules need c >= 5, got {c}")
        if epsilon is None:
            epsilon = Fraction(1, 100 * (c + 2))
        if epsilon <= 0:
            raise InvalidParameterError("epsilon", f"epsilon must be positive, got {epsilon}")
        return cls(RuleSetId.ODD_APP_B, c=c, epsilon=Fraction(epsilon))

    @classmethod
    def planar_odd6(cls) -> RuleSet:
        return cls(RuleSetId.PLANAR_ODD6)

    @classmethod
    def named(cls, name: str, c: int | None = None, epsilon: Fraction | None = None) -> RuleSet:
        """Rule set from its CLI name; ``pcf6plus`` defaults to c = 6 and ``oddb`` to c = 5."""
        try:
            ruleset_id = RuleSetId(name)
        except ValueError:
            known = ", ".join(r.value for r in RuleSetId)
            raise InvalidParameterError(
                "rules", f"unknown rule set {name!r}; known: {known}"
            ) from None
        if ruleset_id is RuleSetId.ODD4_TWO_NINTHS:
            return cls.odd4()
        if ruleset_id is RuleSetId.PCF_C5:
            return cls.pcf_c5()
        if ruleset_id is RuleSetId.PCF_C6PLUS:
            return cls.pcf_c6plus(6 if c is None else c)
        if ruleset_id is RuleSetId.ODD_APP_B:
            return cls.odd_app_b(5 if c is None else c, epsilon)
        return cls.planar_odd6()

    @property
    def requires_plane(self) -> bool:
        return self.id is RuleSetId.PLANAR_ODD6

    @property
    def target(self) -> Fraction:
        """Lower bound the rule set is meant to establish for every final charge."""
        if self.id is RuleSetId.ODD4_TWO_NINTHS:
            return ODD4_MAD_BOUND
        if self.id is RuleSetId.PLANAR_ODD6:
            return Fraction(0)
        assert self.c is not None
        return Fraction(4 * self.c, self.c + 2)

    @property
    def label(self) -> str:
        if self.c is None or self.id is RuleSetId.PCF_C5:
            return self.id.value
        return f"{self.id.value}(c={self.c})"


def _unwrap(source: Graph | PlaneGraph, ruleset: RuleSet) -> tuple[Graph, PlaneGraph | None]:
    if isinstance(source, PlaneGraph):
        return source.graph, source
    if ruleset.requires_plane:
        raise InputKindError("PlaneGraph", type(source).__name__)
    return source, None


def initial_charges(source: Graph | PlaneGraph, ruleset: RuleSet) -> ChargeLedger:
    """d(v) per vertex, or d(v) - 6 per vertex and 2d(f) - 6 per face for the planar rules."""
    graph, plane = _unwrap(source, ruleset)
    if ruleset.requires_plane:
        assert plane is not None
        charges = {vertex(v): Fraction(graph.degree(v) - 6) for v in range(graph.n)}
        for f in range(len(plane.faces)):
            charges[face(f)] = Fraction(2 * plane.face_degree(f) - 6)
    else:
        charges = {vertex(v): Fraction(graph.degree(v)) for v in range(graph.n)}
    return ChargeLedger(ruleset=ruleset.label, initial=charges)


def classify_faces(plane: PlaneGraph) -> dict[int, FaceClass]:
    """5-faces only: bad when incident with a 2-vertex, good otherwise."""
    graph = plane.graph
    return {
        f: "bad" if any(graph.degree(v) == 2 for v in walk) else "good"
        for f, walk in enumerate(plane.faces)
        if len(walk) == 5
    }


def _odd4(graph: Graph, ledger: ChargeLedger) -> None:
    amount = Fraction(2, 9)
    decomposition = threads(graph)
    for v in range(graph.n):
        if graph.degree(v) < 3:
            continue
        for u in sorted(decomposition.close_vertices(v)):
            ledger.send(vertex(v), vertex(u), amount, "close-2/9")


def _pcf_c5(graph: Graph, ledger: ChargeLedger) -> None:
    to_two, to_needy = Fraction(3, 7), Fraction(4, 21)
    stats = [DegStats.of(graph, v) for v in range(graph.n)]
    for v in range(graph.n):
        d = graph.degree(v)
        if d < 3:
            continue
        for u in graph.adj[v]:
            du = graph.degree(u)
            if du == 2:
                ledger.send(vertex(v), vertex(u), to_two, "R1-3/7")
            elif d >= 4 and (
                (du == 3 and stats[u].n2 >= 1) or (du == 4 and stats[u].n2 >= 3)
            ):
                ledger.send(vertex(v), vertex(u), to_needy, "R2-4/21")


def _pcf_c6plus(graph: Graph, ledger: ChargeLedger, c: int) -> None:
    to_two = Fraction(c - 2, c + 2)
    to_three = Fraction(c - 6, 3 * (c + 2))
    for v in range(graph.n):
        if graph.degree(v) < 4:
            continue
        for u in graph.adj[v]:
            if graph.degree(u) == 2:
                ledger.send(vertex(v), vertex(u), to_two, "R1-(c-2)/(c+2)")
            elif graph.degree(u) == 3:
                ledger.send(vertex(v), vertex(u), to_three, "R2-(c-6)/3(c+2)")


def _odd_app_b(graph: Graph, ledger: ChargeLedger, c: int, epsilon: Fraction) -> None:
    to_two = Fraction(c - 2, c + 2)
    to_big = (1 + epsilon) / (c + 2)
    easy = [is_easy(graph, v) for v in range(graph.n)]

    def non_easy_big(u: int) -> bool:
        return graph.degree(u) >= 4 and not easy[u]

    for v in range(graph.n):
        d = graph.degree(v)
        if d == 2:
            for u in graph.adj[v]:
                if graph.degree(u) >= 3:
                    ledger.send(vertex(u), vertex(v), to_two, "R1-(c-2)/(c+2)")
        elif d == 3:
            sponsors = [u for u in graph.adj[v] if non_easy_big(u)]
            if sponsors:
                share = (2 * c - 8 + 2 * epsilon) / ((c + 2) * len(sponsors))
                for u in sponsors:
                    ledger.send(vertex(u), vertex(v), share, "R2-(2c-8+2e)/(c+2)t")
        elif d >= 4:
            for u in graph.adj[v]:
                if non_easy_big(u):
                    ledger.send(vertex(u), vertex(v), to_big, "R3-(1+e)/(c+2)")


def _face_share(graph: Graph, x: int, v: int, z: int, size: int) -> Fraction:
    """Amount a 6+-face of degree ``size`` sends to ``v`` at the incidence ``x v z``."""
    ends = {x, z}
    twos = sum(1 for w in ends if graph.degree(w) == 2)
    others = len(ends) - twos
    per_two = Fraction(2 * size - 6, size) - 1
    per_other = Fraction(size - 3, size)
    return per_two * twos + per_other * others


def _planar_odd6(plane: PlaneGraph, ledger: ChargeLedger) -> None:
    graph = plane.graph
    easy = [is_easy(graph, v) for v in range(graph.n)]
    classes = classify_faces(plane)
    half, one, two = Fraction(1, 2), Fraction(1), Fraction(2)

    for f, walk in enumerate(plane.faces):
        size = len(walk)
        for x, v, z in plane.incidences(f):
            d = graph.degree(v)
            if d == 2:
                ledger.send(face(f), vertex(v), two, "R1", phase="face")
            elif d == 3 and size in (4, 5):
                ledger.send(face(f), vertex(v), one, "R2", phase="face")
            elif d >= 4 and classes.get(f) == "bad":
                ledger.send(face(f), vertex(v), half, "R3", phase="face")
            elif d >= 4 and classes.get(f) == "good":
                ledger.send(face(f), vertex(v), one if easy[v] else half, "R4", phase="face")
            if d >= 3 and size >= 6:
                share = _face_share(graph, x, v, z, size)
                ledger.send(face(f), vertex(v), share, "R5", phase="face")

    quarter, eighth = Fraction(1, 4), Fraction(1, 8)
    for f, walk in enumerate(plane.faces):
        size = len(walk)
        if size > 4:
            continue
        for a, b in sorted(set(walk_edges(walk))):
            for v, w in ((a, b), (b, a)):
                if graph.degree(v) < 4 or easy[v]:
                    continue
                if size == 3 and graph.degree(w) == 3:
                    ledger.send(vertex(v), vertex(w), quarter, "R6", phase="vertex")
                if graph.degree(w) == 4 and easy[w]:
                    ledger.send(vertex(v), vertex(w), eighth, "R7", phase="vertex")


def run_rules(source: Graph | PlaneGraph, ruleset: RuleSet) -> ChargeLedger:
    """Initial charges plus every transfer of ``ruleset``, conservation checked."""
    ledger = initial_charges(source, ruleset)
    graph, plane = _unwrap(source, ruleset)
    if ruleset.id is RuleSetId.ODD4_TWO_NINTHS:
        _odd4(graph, ledger)
    elif ruleset.id is RuleSetId.PCF_C5:
        _pcf_c5(graph, ledger)
    elif ruleset.id is RuleSetId.PCF_C6PLUS:
        assert ruleset.c is not None
        _pcf_c6plus(graph, ledger, ruleset.c)
    elif ruleset.id is RuleSetId.ODD_APP_B:
        assert ruleset.c is not None and ruleset.epsilon is not None
        _odd_app_b(graph, ledger, ruleset.c, ruleset.epsilon)
    else:
        assert plane is not None
        _planar_odd6(plane, ledger)
    ledger.check_conservation()
    logger.debug("ran %s: %d transfers", ruleset.label, len(ledger.transfers))
    return ledger
