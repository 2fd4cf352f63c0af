"""Degree statistics, extremal-class recognizers and configuration detectors."""

import pytest

from oddcolor_lab.constants import LemmaKind, TheoremContext
from oddcolor_lab.exceptions import InputKindError, InvalidParameterError
from oddcolor_lab.generators import gen_ht, gen_sk
from oddcolor_lab.graphs import (
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
    plane_fixture,
)
from oddcolor_lab.structures import (
    RULES,
    ClassHWitness,
    ConfigurationFinding,
    DegStats,
    close_two_vertices,
    detect_reducible,
    find_bad_structure,
    girth_threshold,
    in_class_H,
    is_easy,
    lemma_bound,
    rules_for,
    validate_bad_structure,
    validate_class_H,
    validate_finding,
)

STAR3 = from_edges(4, [(0, 1), (0, 2), (0, 3)])
STAR4 = from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
SPIDER = from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


class TestStats:
    def test_easy_vertices(self):
        assert is_easy(complete_graph(4), 0)
        assert not is_easy(complete_graph(5), 0)
        assert not is_easy(cycle_graph(5), 0)
        assert is_easy(STAR4, 0)

    def test_degree_profile(self):
        stats = DegStats.of(SPIDER, 0)
        assert stats.degree == 3
        assert (stats.n1, stats.n2, stats.n3, stats.n4plus) == (0, 3, 0, 0)
        assert stats.ne == 0
        assert DegStats.of(STAR4, 1).neighbor_degrees == (4,)

    def test_lemma_bound(self):
        assert lemma_bound(cycle_graph(5), 0, LemmaKind.PCF) == 2
        assert lemma_bound(SPIDER, 0, LemmaKind.PCF) == 3
        assert lemma_bound(complete_graph(4), 0, LemmaKind.PCF3) == 3
        assert lemma_bound(complete_graph(4), 0, LemmaKind.ODD) == 3

    def test_close_two_vertices(self):
        assert close_two_vertices(SPIDER, 0) == frozenset({1, 3, 5})
        with pytest.raises(InvalidParameterError):
            close_two_vertices(path_graph(5), 2)

    @pytest.mark.parametrize("c, expected", [(5, 7), (6, 6), (8, 6), (10, 5)])
    def test_girth_threshold(self, c, expected):
        assert girth_threshold(c) == expected

    def test_girth_threshold_floor(self):
        with pytest.raises(InvalidParameterError):
            girth_threshold(4)


class TestBadStructure:
    @pytest.mark.parametrize("c", [4, 5, 6])
    def test_found_in_subdivided_complete_graph(self, c):
        graph = gen_sk(c + 1)
        witness = find_bad_structure(graph, c)
        assert witness is not None
        assert witness.branch == tuple(range(c + 1))
        assert validate_bad_structure(graph, witness, c)
        assert not validate_bad_structure(graph, witness, c + 1)

    def test_absent(self):
        assert find_bad_structure(gen_sk(6), 6) is None
        assert find_bad_structure(cycle_graph(5), 4) is None
        assert find_bad_structure(complete_graph(6), 5) is None

    def test_c_floor(self):
        with pytest.raises(InvalidParameterError):
            find_bad_structure(gen_sk(4), 3)

    def test_witness_serialises(self):
        witness = find_bad_structure(gen_sk(5), 4)
        assert witness is not None
        payload = witness.to_dict()
        assert payload["branch"] == [0, 1, 2, 3, 4]
        assert len(payload["subdivision"]) == 10


class TestClassH:
    def test_chain_of_five_cycles(self):
        graph = gen_ht([0, 0, 3])
        witness = in_class_H(graph)
        assert witness is not None
        assert witness.t == 4
        assert validate_class_H(graph, witness)

    def test_first_qualifying_component(self):
        graph = path_graph(2).disjoint_union(cycle_graph(5))
        witness = in_class_H(graph)
        assert witness is not None
        assert witness.component == (2, 3, 4, 5, 6)
        assert witness.t == 1

    def test_not_in_class(self):
        assert in_class_H(cycle_graph(6)) is None
        assert in_class_H(gen_sk(5)) is None
        assert in_class_H(path_graph(1)) is None

    def test_bogus_witnesses_fail(self):
        c5 = cycle_graph(5)
        assert not validate_class_H(c5, ClassHWitness(component=(0, 1, 2, 3, 4), blocks=()))
        partial = ClassHWitness(component=(0, 1, 2), blocks=((0, 1, 2),))
        assert not validate_class_H(c5, partial)


class TestDetectors:
    def test_rule_table(self):
        ids = [rule.id for rule in RULES]
        assert len(ids) == len(set(ids))
        for context in TheoremContext:
            assert rules_for(context), context

    def test_five_cycle_is_clean_for_odd4(self):
        assert detect_reducible(cycle_graph(5), TheoremContext.ODD4) == []

    def test_six_cycle_has_a_long_thread(self):
        findings = detect_reducible(cycle_graph(6), TheoremContext.ODD4)
        assert [f.rule for f in findings] == ["four-thread"]
        assert findings[0].vertices == (0, 1, 2, 3, 4, 5)

    def test_pendant_vertices(self):
        findings = detect_reducible(STAR3, TheoremContext.ODD4)
        assert [(f.rule, f.vertices) for f in findings] == [
            ("one-vertex", (1,)),
            ("one-vertex", (2,)),
            ("one-vertex", (3,)),
        ]

    def test_two_vertex_in_triangle(self):
        graph = from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
        findings = detect_reducible(graph, TheoremContext.PCF_C, 5)
        expected = ConfigurationFinding("two-vertex-in-triangle", TheoremContext.PCF_C, (2,))
        assert expected in findings

    def test_odd_mad_context_on_c5(self):
        findings = detect_reducible(cycle_graph(5), TheoremContext.ODD_MAD_C, 5)
        assert {f.rule for f in findings} == {"adjacent-two-vertices", "odd-residue"}

    def test_bad_structure_is_not_reducible(self):
        assert detect_reducible(gen_sk(6), TheoremContext.PCF_C, 5) == []

    def test_planar_context(self):
        dodecahedron = plane_fixture("dodecahedron")
        findings = detect_reducible(dodecahedron, TheoremContext.PLANAR_ODD6)
        assert findings
        assert all(validate_finding(dodecahedron, f) for f in findings)

    def test_planar_context_needs_a_plane_graph(self):
        with pytest.raises(InputKindError):
            detect_reducible(cycle_graph(5), TheoremContext.PLANAR_ODD6)

    def test_fixed_and_minimum_palettes(self):
        with pytest.raises(InvalidParameterError):
            detect_reducible(cycle_graph(5), TheoremContext.ODD4, 5)
        with pytest.raises(InvalidParameterError):
            detect_reducible(cycle_graph(5), TheoremContext.PCF_C, 4)


class TestValidateFinding:
    def test_findings_revalidate(self):
        for finding in detect_reducible(STAR3, TheoremContext.ODD4):
            assert validate_finding(STAR3, finding)
        payload = detect_reducible(STAR3, TheoremContext.ODD4)[0].to_dict()
        assert payload == {"rule": "one-vertex", "context": "odd4", "vertices": [1]}

    def test_forged_findings_fail(self):
        assert not validate_finding(
            STAR3, ConfigurationFinding("one-vertex", TheoremContext.ODD4, (0,))
        )
        assert not validate_finding(
            STAR3, ConfigurationFinding("no-such-rule", TheoremContext.ODD4, (1,))
        )
        assert not validate_finding(
            STAR3, ConfigurationFinding("one-vertex", TheoremContext.ODD4, (9,))
        )
        assert not validate_finding(
            STAR3, ConfigurationFinding("pcf-residue", TheoremContext.ODD4, (1,))
        )
