"""Family constructors, family strings and the seeded stream."""

from fractions import Fraction

import networkx as nx
import pytest

from oddcolor_lab.density import mad_at_most, mad_exact
from oddcolor_lab.exceptions import GraphFormatError, InvalidParameterError
from oddcolor_lab.generators import (
    SeededStream,
    dipole,
    family_predicate,
    gen_gnm,
    gen_ht,
    gen_odd4_extremal,
    gen_random_mad_bounded,
    gen_sk,
    generate,
    parse_family,
    parse_multigraph,
    regular_multigraph,
)
from oddcolor_lab.graphs import PlaneGraph, cycle_graph, path_graph, plane_fixture, to_networkx
from oddcolor_lab.harness.generate import cmd_generate
from oddcolor_lab.structures import in_class_H


class TestSeededStream:
    def test_same_seed_same_stream(self):
        first, second = SeededStream(11), SeededStream(11)
        assert [first.next_u64() for _ in range(5)] == [second.next_u64() for _ in range(5)]
        assert SeededStream(12).next_u64() != SeededStream(11).next_u64()

    def test_below_stays_in_range(self):
        stream = SeededStream(0)
        draws = [stream.below(7) for _ in range(500)]
        assert set(draws) == set(range(7))

    def test_shuffle_is_a_permutation(self):
        items = list(range(20))
        SeededStream(5).shuffle(items)
        assert sorted(items) == list(range(20))
        again = list(range(20))
        SeededStream(5).shuffle(again)
        assert items == again

    def test_bad_arguments(self):
        with pytest.raises(InvalidParameterError):
            SeededStream(-1)
        with pytest.raises(InvalidParameterError):
            SeededStream(0).below(0)


class TestConstructors:
    def test_subdivided_complete_graph(self):
        graph = gen_sk(4)
        assert (graph.n, graph.m) == (10, 12)
        assert graph.degrees[:4] == (3, 3, 3, 3)
        with pytest.raises(InvalidParameterError):
            gen_sk(1)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_subdivision_family_matches_sk(self, n):
        built = generate(f"subdiv:k{n}")
        assert (built.n, built.m) == (gen_sk(n).n, gen_sk(n).m)
        assert nx.is_isomorphic(to_networkx(built), to_networkx(gen_sk(n)))

    def test_five_cycle_chains(self):
        assert gen_ht([]) == cycle_graph(5)
        graph = gen_ht([0, 0, 3])
        assert (graph.n, graph.m) == (17, 20)
        assert graph.degree(0) == 6
        with pytest.raises(InvalidParameterError):
            gen_ht([5])

    def test_gnm(self):
        graph = gen_gnm(6, 7, 1)
        assert graph.m == 7
        assert gen_gnm(6, 7, 1) == graph
        with pytest.raises(InvalidParameterError):
            gen_gnm(4, 7, 0)

    def test_random_mad_bounded_is_maximal(self):
        bound = Fraction(22, 9)
        graph = gen_random_mad_bounded(9, bound, 3)
        assert mad_at_most(graph, bound)
        for u in range(graph.n):
            for v in range(u + 1, graph.n):
                if not graph.has_edge(u, v):
                    assert not mad_at_most(graph.add_edge(u, v), bound)

    def test_random_mad_bounded_arguments(self):
        with pytest.raises(InvalidParameterError):
            gen_random_mad_bounded(0, Fraction(2), 0)
        with pytest.raises(InvalidParameterError):
            gen_random_mad_bounded(5, Fraction(-1), 0)
        assert gen_random_mad_bounded(8, Fraction(3), 1, max_edges=4).m == 4

    def test_regular_multigraphs(self):
        multigraph = regular_multigraph(6, 5, 0)
        assert multigraph.regularity() == 5
        assert regular_multigraph(6, 5, 0) == multigraph
        assert dipole(4).regularity() == 4
        with pytest.raises(InvalidParameterError):
            regular_multigraph(3, 3, 0)

    @pytest.mark.parametrize("k", [2, 4])
    def test_odd4_extremal(self, k):
        graph = gen_odd4_extremal(k)
        assert graph.n == 4 * k + k // 2
        assert all(graph.degree(v) == 4 for v in range(k))
        assert mad_exact(graph) == Fraction(22, 9)

    def test_odd4_extremal_needs_even_k(self):
        with pytest.raises(InvalidParameterError):
            gen_odd4_extremal(3)


class TestFamilyStrings:
    def test_parse(self):
        assert parse_family("ht:1,1,3").params == (1, 1, 3)
        assert parse_family("ht:3").params == (0, 0)
        assert parse_family("rand:10:22/9:42").params == (10, Fraction(22, 9), 42)
        assert parse_family(" sk:6 ").text == "sk:6"
        assert parse_family("plane:cube").to_dict() == {"family": "plane", "spec": "plane:cube"}

    @pytest.mark.parametrize("text", ["", "foo:1", "sk:", "ht:0", "rand:10:x:1"])
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            parse_family(text)

    def test_multigraph_specs(self):
        assert parse_multigraph("reg5x2") == dipole(5)
        assert parse_multigraph("k6").is_simple_complete()
        assert parse_multigraph("regmulti:4:3:1").regularity() == 3
        with pytest.raises(GraphFormatError):
            parse_multigraph("petersen")

    def test_generate(self):
        assert generate("sk:6") == gen_sk(6)
        chain = generate("ht:4")
        witness = in_class_H(chain)
        assert witness is not None and witness.t == 4
        assert isinstance(generate("plane:cube"), PlaneGraph)
        assert generate("plane:cube") == plane_fixture("cube")
        assert mad_at_most(generate("rand:10:22/9:42"), Fraction(22, 9))

    def test_family_predicate_rejects_impostors(self):
        assert not family_predicate(parse_family("cycle:5"), path_graph(5))
        assert not family_predicate(parse_family("ht:2"), cycle_graph(5))
        assert family_predicate(parse_family("odd4x:2"), gen_odd4_extremal(2))


class TestGenerateCommand:
    def test_graph6_output(self):
        result = cmd_generate({"family": "cycle:5"})
        assert result == {"family": "cycle", "spec": "cycle:5", "n": 5, "m": 5, "graph6": "Dhc"}

    def test_json_output(self):
        result = cmd_generate({"family": "sk:4", "format": "json"})
        assert result["mad"] == "12/5"
        assert len(result["edges"]) == 12

    def test_planegraph_output(self):
        result = cmd_generate({"family": "plane:c5", "format": "planegraph"})
        assert result["planegraph"].startswith("planegraph 5 5 2")

    def test_planegraph_needs_an_embedding(self):
        result = cmd_generate({"family": "sk:4", "format": "planegraph"})
        assert result["error"]["code"] == "INVALID_PARAMETER"

    def test_bad_requests(self):
        assert cmd_generate({"family": "foo:1"})["error"]["code"] == "PARSE_ERROR"
        assert cmd_generate({"family": "sk:4", "format": "dot"})["error"]["code"] == (
            "INVALID_PARAMETER"
        )
