"""Coloring verdicts, exact solvers and the brute-force oracle."""

import pytest

from oddcolor_lab.coloring import (
    OddColor,
    PartialColoring,
    brute_oracle,
    chi,
    minimum_coloring,
    odd_color_of,
    pcf_color_of,
    solve,
    solve_semi,
    verify,
    verify_semi_odd,
    verify_semi_pcf,
)
from oddcolor_lab.constants import ColorMode
from oddcolor_lab.exceptions import (
    ColoringError,
    InstanceTooLargeError,
    InvalidParameterError,
    SolverTimeout,
)
from oddcolor_lab.generators import gen_gnm, gen_ht, gen_sk
from oddcolor_lab.graphs import (
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    path_graph,
    plane_fixture,
    write_graph6,
)
from oddcolor_lab.harness.corpus import graphs_on

STAR = from_edges(4, [(0, 1), (0, 2), (0, 3)])


class TestPartialColoring:
    def test_colors_must_fit_the_palette(self):
        with pytest.raises(ColoringError):
            PartialColoring(3, (1, 4))
        with pytest.raises(ColoringError):
            PartialColoring(3, (0, 1))

    def test_helpers(self):
        coloring = PartialColoring.empty(3, 4).with_colors({0: 2, 2: 4})
        assert coloring.colored_vertices() == [0, 2]
        assert not coloring.is_total()
        assert coloring.restrict_away([0]).assignment == (None, None, 4)
        with pytest.raises(ColoringError):
            coloring.as_list()
        assert PartialColoring.total([1, 2, 3]).palette == 3

    def test_neighborhood_queries(self):
        repeated = PartialColoring.total([4, 1, 1, 2], palette=4)
        assert pcf_color_of(STAR, repeated, 0) == 2
        assert odd_color_of(STAR, repeated, 0) == OddColor(2, True)
        distinct = PartialColoring.total([4, 1, 2, 3], palette=4)
        assert odd_color_of(STAR, distinct, 0) == OddColor(1, False)
        doubled = PartialColoring.total([4, 1, 1, 4], palette=4)
        assert pcf_color_of(STAR, doubled, 0) == 4


class TestVerify:
    def test_c5_with_three_colors(self):
        coloring = PartialColoring.total([1, 2, 1, 2, 3])
        assert verify(cycle_graph(5), coloring, ColorMode.PROPER).ok
        odd = verify(cycle_graph(5), coloring, ColorMode.ODD)
        assert [v.vertex for v in odd.violations] == [1, 2]
        pcf = verify(cycle_graph(5), coloring, ColorMode.PCF)
        assert [v.vertex for v in pcf.violations] == [1, 2]
        assert pcf.to_dict()["ok"] is False

    def test_improper_coloring(self):
        verdict = verify(path_graph(2), PartialColoring.total([1, 1]), ColorMode.PROPER)
        assert not verdict.ok

    def test_isolated_vertices_are_exempt(self):
        assert verify(empty_graph(2), PartialColoring.total([1, 1]), ColorMode.ODD).ok

    def test_partial_coloring_rejected(self):
        with pytest.raises(ColoringError):
            verify(path_graph(2), PartialColoring(2, (1, None)), ColorMode.PCF)
        with pytest.raises(ColoringError):
            verify(path_graph(3), PartialColoring.total([1, 2]), ColorMode.PCF)
        with pytest.raises(ColoringError):
            verify(path_graph(2), PartialColoring.total([1, 2]), ColorMode.SEMI_PCF)


class TestSemiVerdicts:
    def test_semi_pcf_on_c5(self):
        good = PartialColoring(3, (None, 1, 2, 3, 1))
        assert verify_semi_pcf(cycle_graph(5), {0}, good).ok
        bad = PartialColoring(3, (None, 1, 2, 1, 2))
        verdict = verify_semi_pcf(cycle_graph(5), {0}, bad)
        assert [v.vertex for v in verdict.violations] == [2, 3]

    def test_semi_odd_exempts_the_boundary(self):
        coloring = PartialColoring(3, (None, 1, 2, 1, 2))
        verdict = verify_semi_odd(cycle_graph(5), {0}, coloring)
        assert [v.vertex for v in verdict.violations] == [2, 3]

    def test_high_degree_boundary_vertex(self):
        # center 0 sees 2, 2, 3, 3 once vertex 5 is removed
        graph = from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])
        coloring = PartialColoring(3, (1, 2, 2, 3, 3, None))
        assert verify_semi_odd(graph, {5}, coloring).ok
        verdict = verify_semi_pcf(graph, {5}, coloring)
        assert [v.vertex for v in verdict.violations] == [0]

    def test_removed_vertices_stay_uncolored(self):
        with pytest.raises(ColoringError):
            verify_semi_pcf(cycle_graph(5), {0}, PartialColoring.total([1, 2, 3, 1, 2]))
        with pytest.raises(ColoringError):
            verify_semi_pcf(cycle_graph(5), {0}, PartialColoring(3, (None, 1, None, 3, 1)))

    def test_solve_semi_returns_a_semi_coloring(self):
        graph = cycle_graph(5)
        found = solve_semi(graph, {0}, 5, ColorMode.SEMI_PCF)
        assert found is not None
        assert found.color(0) is None
        assert verify_semi_pcf(graph, {0}, found).ok
        with pytest.raises(InvalidParameterError):
            solve_semi(graph, {0}, 5, ColorMode.PCF)


class TestSolver:
    def test_c5_chromatic_numbers(self):
        c5 = cycle_graph(5)
        assert chi(c5, ColorMode.PROPER) == 3
        assert chi(c5, ColorMode.ODD) == 5
        assert chi(c5, ColorMode.PCF) == 5
        assert solve(c5, 4, ColorMode.ODD) is None

    @pytest.mark.parametrize("n", [5, 6])
    def test_subdivided_complete_graphs_need_n_colors(self, n):
        assert chi(gen_sk(n), ColorMode.ODD) == n

    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_five_cycle_cacti(self, t):
        graph = gen_ht([0] * (t - 1))
        assert solve(graph, 4, ColorMode.ODD) is None
        odd = solve(graph, 5, ColorMode.ODD)
        pcf = solve(graph, 5, ColorMode.PCF)
        assert odd is not None and verify(graph, odd, ColorMode.ODD).ok
        assert pcf is not None and verify(graph, pcf, ColorMode.PCF).ok

    @pytest.mark.parametrize(
        "graph", [cycle_graph(6), complete_graph(4), plane_fixture("cube").graph]
    )
    def test_chromatic_chain(self, graph):
        proper = chi(graph, ColorMode.PROPER)
        odd = chi(graph, ColorMode.ODD)
        pcf = chi(graph, ColorMode.PCF)
        assert proper <= odd <= pcf

    def test_minimum_coloring_witness(self):
        count, witness = minimum_coloring(cycle_graph(6), ColorMode.ODD)
        assert count == 3
        assert witness is not None and verify(cycle_graph(6), witness, ColorMode.ODD).ok
        assert minimum_coloring(empty_graph(0), ColorMode.ODD) == (0, None)
        assert chi(empty_graph(3), ColorMode.PCF) == 1

    def test_rejects_bad_arguments(self):
        with pytest.raises(InvalidParameterError):
            solve(cycle_graph(5), 0, ColorMode.ODD)
        with pytest.raises(InvalidParameterError):
            solve(cycle_graph(5), 5, ColorMode.SEMI_ODD)

    def test_expired_deadline_raises(self):
        cube = plane_fixture("cube").graph
        graph = cube.disjoint_union(cube).disjoint_union(cube).disjoint_union(cycle_graph(5))
        with pytest.raises(SolverTimeout):
            solve(graph, 4, ColorMode.ODD, deadline=0.0)


class TestOracle:
    def test_oracle_values(self):
        assert brute_oracle(cycle_graph(5), 4, ColorMode.ODD) is None
        found = brute_oracle(cycle_graph(5), 5, ColorMode.PCF)
        assert found is not None and verify(cycle_graph(5), found, ColorMode.PCF).ok

    def test_oracle_size_cap(self):
        with pytest.raises(InstanceTooLargeError):
            brute_oracle(complete_graph(14), 4, ColorMode.ODD)

    @pytest.mark.slow
    def test_solver_agrees_with_oracle_on_small_graphs(self):
        disagreements = []
        for n in range(1, 7):
            for graph in graphs_on(n):
                for c in range(1, 5):
                    for mode in (ColorMode.ODD, ColorMode.PCF):
                        fast = solve(graph, c, mode)
                        slow = brute_oracle(graph, c, mode)
                        if (fast is None) != (slow is None):
                            disagreements.append((graph, c, mode))
                        elif fast is not None and not verify(graph, fast, mode).ok:
                            disagreements.append((graph, c, mode))
        assert disagreements == []


class TestColorabilityProperties:
    @pytest.mark.slow
    def test_colorable_stays_colorable_with_more_colors(self):
        gaps = []
        for n in range(1, 7):
            for graph in graphs_on(n):
                for mode in (ColorMode.ODD, ColorMode.PCF):
                    found = [solve(graph, c, mode) is not None for c in range(1, 6)]
                    if any(ok and not more for ok, more in zip(found, found[1:])):
                        gaps.append((write_graph6(graph), mode))
        assert gaps == []

    @pytest.mark.parametrize("seed", range(20))
    def test_pcf_colorings_are_odd(self, seed):
        graph = gen_gnm(7, 9, seed)
        for c in range(1, 6):
            coloring = solve(graph, c, ColorMode.PCF)
            if coloring is not None:
                assert verify(graph, coloring, ColorMode.PCF).ok
                assert verify(graph, coloring, ColorMode.ODD).ok
