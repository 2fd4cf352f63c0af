"""Exact maximum average degree."""

from fractions import Fraction

import pytest

from oddcolor_lab.density import densest_subgraph, mad_at_most, mad_brute, mad_exact
from oddcolor_lab.exceptions import (
    InstanceTooLargeError,
    InvalidGraphError,
    InvalidParameterError,
)
from oddcolor_lab.generators import SeededStream, gen_gnm, gen_ht, gen_sk
from oddcolor_lab.graphs import complete_graph, cycle_graph, empty_graph, from_edges, path_graph


class TestMadExact:
    @pytest.mark.parametrize("c", [4, 5, 6, 7, 8])
    def test_subdivided_complete_graphs(self, c):
        assert mad_exact(gen_sk(c + 1)) == Fraction(4 * c, c + 2)

    def test_small_values(self):
        assert mad_exact(cycle_graph(5)) == 2
        assert mad_exact(path_graph(4)) == Fraction(3, 2)
        assert mad_exact(complete_graph(5)) == 4
        assert mad_exact(empty_graph(3)) == 0
        assert mad_exact(gen_ht([0, 0, 3])) == Fraction(40, 17)

    def test_certificate_is_the_dense_part(self):
        # K4 with a pendant edge: the K4 alone is denser than the whole graph
        graph = from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
        certificate = densest_subgraph(graph)
        assert certificate.subgraph == frozenset({0, 1, 2, 3})
        assert certificate.density == Fraction(3, 2)
        assert mad_exact(graph) == 3

    def test_null_graph_rejected(self):
        with pytest.raises(InvalidGraphError):
            mad_exact(empty_graph(0))


class TestMadDecision:
    def test_bound_is_inclusive(self):
        assert mad_at_most(cycle_graph(5), 2)
        assert not mad_at_most(cycle_graph(5), Fraction(19, 10))
        assert mad_at_most(gen_sk(6), Fraction(20, 7))
        assert not mad_at_most(gen_sk(6), Fraction(19, 7))

    def test_negative_bound(self):
        with pytest.raises(InvalidParameterError):
            mad_at_most(cycle_graph(5), -1)

    def test_edgeless(self):
        assert mad_at_most(empty_graph(4), 0)


class TestMadBrute:
    def test_matches_known_values(self):
        assert mad_brute(cycle_graph(5)) == 2
        assert mad_brute(gen_sk(5)) == Fraction(16, 6)

    def test_size_cap(self):
        with pytest.raises(InstanceTooLargeError):
            mad_brute(empty_graph(21))

    @pytest.mark.slow
    def test_flow_agrees_with_brute_force(self):
        stream = SeededStream(2024)
        mismatches = []
        for seed in range(200):
            n = 2 + stream.below(13)
            m = stream.below(n * (n - 1) // 2 + 1)
            graph = gen_gnm(n, m, seed)
            if mad_exact(graph) != mad_brute(graph):
                mismatches.append((n, m, seed))
        assert mismatches == []


class TestMadProperties:
    @pytest.mark.parametrize("seed", range(20))
    def test_at_least_the_average_degree(self, seed):
        graph = gen_gnm(9, 14, seed)
        assert mad_exact(graph) >= Fraction(2 * graph.m, graph.n)

    @pytest.mark.parametrize("seed", range(20))
    def test_deleting_a_vertex_never_raises_mad(self, seed):
        graph = gen_gnm(9, 14, seed)
        whole = mad_exact(graph)
        increases = []
        for v in range(graph.n):
            smaller, _ = graph.remove_vertices([v])
            if mad_exact(smaller) > whole:
                increases.append(v)
        assert increases == []
