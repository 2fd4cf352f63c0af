"""Constructive extensions, the subdivided-multigraph colorer and lemma instances."""

import pytest

from oddcolor_lab.coloring import (
    PartialColoring,
    color_subdivided,
    extend_lemma_semi_odd,
    extend_lemma_semi_pcf,
    extend_lemma_semi_pcf_deg3,
    verify,
)
from oddcolor_lab.coloring.instances import (
    admissible_instances,
    lemma_applicable,
    removed_set,
)
from oddcolor_lab.constants import ColorMode, LemmaKind, TheoremId
from oddcolor_lab.exceptions import InvalidParameterError, PreconditionError
from oddcolor_lab.generators import dipole, parse_multigraph
from oddcolor_lab.graphs import (
    Multigraph,
    complete_graph,
    complete_multigraph,
    cycle_graph,
    subdivide,
)
from oddcolor_lab.harness.campaigns import run_lemma_campaign

# (C5, {0, 1, 4}) with the path 2-3 colored 1, 2
C5_SEMI = PartialColoring(5, (None, None, 1, 2, None))

TRIPLED_C4 = Multigraph(4, ((0, 1),) * 3 + ((1, 2),) * 3 + ((2, 3),) * 3 + ((0, 3),) * 3)


class TestExtendSemiPcf:
    def test_c5_extension_is_deterministic(self):
        result = extend_lemma_semi_pcf(cycle_graph(5), 0, C5_SEMI, 5)
        assert result.coloring.assignment == (3, 4, 1, 2, 5)
        assert verify(cycle_graph(5), result.coloring, ColorMode.PCF).ok
        assert [step.vertex for step in result.steps] == [0, 1, 4]
        assert result.max_slack == 0

    def test_palette_too_small(self):
        with pytest.raises(PreconditionError) as info:
            extend_lemma_semi_pcf(cycle_graph(5), 0, C5_SEMI, 4)
        assert info.value.code == "PRECONDITION_FAILED"

    def test_needs_a_two_neighbor(self):
        coloring = PartialColoring.empty(4, 5)
        with pytest.raises(PreconditionError):
            extend_lemma_semi_pcf(complete_graph(4), 0, coloring, 5)

    def test_rejects_an_invalid_semi_coloring(self):
        bad = PartialColoring(5, (None, None, 1, 1, None))
        with pytest.raises(PreconditionError):
            extend_lemma_semi_pcf(cycle_graph(5), 0, bad, 5)

    def test_three_neighbor_variant_needs_seven_colors(self):
        with pytest.raises(PreconditionError):
            extend_lemma_semi_pcf_deg3(cycle_graph(5), 0, C5_SEMI, 6)
        coloring = PartialColoring(7, (None, None, 1, 2, None))
        result = extend_lemma_semi_pcf_deg3(cycle_graph(5), 0, coloring, 7)
        assert verify(cycle_graph(5), result.coloring, ColorMode.PCF).ok


class TestExtendSemiOdd:
    def test_c5_extension(self):
        result = extend_lemma_semi_odd(cycle_graph(5), 0, C5_SEMI, 5)
        assert result.coloring.assignment == (3, 4, 1, 2, 5)
        assert result.repaired == ()
        assert verify(cycle_graph(5), result.coloring, ColorMode.ODD).ok

    def test_even_degree_without_small_neighbors(self):
        graph = complete_graph(5)
        with pytest.raises(PreconditionError):
            extend_lemma_semi_odd(graph, 0, PartialColoring.empty(5, 9), 9)


class TestColorSubdivided:
    @pytest.mark.parametrize("mode", [ColorMode.ODD, ColorMode.PCF])
    def test_dipole(self, mode):
        result = color_subdivided(dipole(5), 5, mode)
        assert len(result.coloring) == subdivide(dipole(5)).n
        assert verify(subdivide(dipole(5)), result.coloring, mode).ok

    @pytest.mark.parametrize("multigraph", [parse_multigraph("reg6x2"), TRIPLED_C4])
    def test_six_regular(self, multigraph):
        result = color_subdivided(multigraph, 6, ColorMode.PCF)
        assert verify(subdivide(multigraph), result.coloring, ColorMode.PCF).ok

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            color_subdivided(complete_multigraph(6), 5, ColorMode.ODD)
        with pytest.raises(PreconditionError):
            color_subdivided(dipole(4), 4, ColorMode.ODD)
        with pytest.raises(PreconditionError):
            color_subdivided(dipole(5), 5, ColorMode.PROPER)
        with pytest.raises(PreconditionError):
            color_subdivided(Multigraph(3, ((0, 1), (1, 2))), 5, ColorMode.PCF)
        with pytest.raises(PreconditionError):
            color_subdivided(dipole(5), 6, ColorMode.PCF)


class TestLemmaInstances:
    def test_removed_set(self):
        assert removed_set(cycle_graph(5), 0, LemmaKind.PCF) == frozenset({0, 1, 4})

    def test_applicability(self):
        assert lemma_applicable(cycle_graph(5), 0, LemmaKind.PCF, 5)
        assert not lemma_applicable(cycle_graph(5), 0, LemmaKind.PCF, 4)
        assert not lemma_applicable(complete_graph(4), 0, LemmaKind.PCF, 5)
        assert lemma_applicable(complete_graph(4), 0, LemmaKind.ODD, 7)

    @pytest.mark.parametrize(
        "kind, c", [(LemmaKind.PCF, 5), (LemmaKind.PCF3, 7), (LemmaKind.ODD, 5)]
    )
    def test_instances_extend(self, kind, c):
        instances = list(admissible_instances(kind, c, 10, seed=7))
        assert instances
        for instance in instances:
            assert instance.coloring.color(instance.vertex) is None
            result = instance.extend()
            mode = ColorMode.ODD if kind is LemmaKind.ODD else ColorMode.PCF
            assert verify(instance.graph, result.coloring, mode).ok

    def test_instances_are_seeded(self):
        first = [i.graph for i in admissible_instances(LemmaKind.PCF, 5, 5, seed=3)]
        second = [i.graph for i in admissible_instances(LemmaKind.PCF, 5, 5, seed=3)]
        assert first == second

    def test_palette_floor(self):
        with pytest.raises(InvalidParameterError):
            list(admissible_instances(LemmaKind.PCF3, 6, 1))


class TestLemmaCampaigns:
    @pytest.mark.slow
    @pytest.mark.parametrize(
        "theorem, c",
        [
            (TheoremId.LEMMA_PCF, 5),
            (TheoremId.LEMMA_PCF3, 7),
            (TheoremId.LEMMA_PCF3, 8),
            (TheoremId.LEMMA_ODD, 5),
        ],
    )
    def test_hundred_instances_without_alarms(self, theorem, c):
        report = run_lemma_campaign(theorem, c=c, count=100, seed=1)
        assert len(report.records) == 100
        assert report.counterexamples == []
        assert report.ok
