import json

import pytest
from hypothesis import given

from hyperent.hypergraph import (
    MAX_N,
    Hypergraph,
    HypergraphError,
    contains_full_edge,
    is_graph,
    max_n,
    parse,
    parse_json,
    rank,
    serialize,
    t_adjacent,
    to_json,
)

from conftest import hypergraphs


def edges_of(g):
    return sorted(sorted(e) for e in g.edge_lists())


class TestParse:
    def test_fig1a(self, fig1a):
        g = parse("4: {4} {1,2} {3,4} {2,3,4}")
        assert g == fig1a
        assert g.n == 4 and g.m == 4
        assert edges_of(g) == [[1, 2], [2, 3, 4], [3, 4], [4]]

    @pytest.mark.parametrize("text", ["3: ", "3:", "  3 :  "])
    def test_empty_hypergraph(self, text):
        assert parse(text) == Hypergraph(3, frozenset())

    def test_duplicates_collapse(self):
        g = parse("2: {1,2} {1,2}")
        assert g.edges == {0b11}

    def test_empty_edge(self):
        assert parse("2: {}").edges == {0}
        assert parse("2: { }").edges == {0}

    def test_whitespace_inside_edges(self):
        assert parse("3:{ 1 , 3 }{2}") == parse("3: {1,3} {2}")

    def test_json(self, fig1a):
        text = '{"n": 4, "edges": [[4],[1,2],[3,4],[2,3,4]]}'
        assert parse(text) == fig1a
        assert parse_json({"n": 2, "edges": [[]]}).edges == {0}

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "4 {1}",
            "4: {1,2",
            "4: 1,2",
            "4: {1,,2}",
            "4: {a}",
            "4: {5}",
            "4: {0}",
            "4: {-1}",
            "0: ",
            f"{MAX_N + 1}: ",
            '{"n": 3}',
            '{"n": 3, "edges": [[4]]}',
            '{"n": "3", "edges": []}',
            '{"n": 3, "edges": [1, 2]}',
            '{"n": 3, "edges": [["1"]]}',
            "{not json",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(HypergraphError):
            parse(text)

    def test_serialize_canonical_order(self, fig1a):
        assert serialize(fig1a) == "4: {4} {1,2} {3,4} {2,3,4}"
        assert serialize(parse("3: {2,3} {} {1}")) == "3: {} {1} {2,3}"
        assert serialize(parse("3: ")) == "3:"

    def test_to_json(self, fig1d):
        assert json.loads(to_json(fig1d)) == {"n": 3, "edges": [[], [3], [2, 3]]}

    @given(hypergraphs(max_n=7))
    def test_round_trip(self, g):
        assert parse(serialize(g)) == g
        assert parse(to_json(g)) == g
        assert serialize(parse(serialize(g))) == serialize(g)


class TestRank:
    def test_examples(self, fig1a):
        assert rank(fig1a) == 3
        assert rank(parse("3: ")) == 0
        assert rank(parse("3: {}")) == 0
        assert rank(parse("3: {} {1} {2,3}")) == 2


class TestTAdjacent:
    def test_fig1d(self, fig1a, fig1d):
        g4 = t_adjacent(fig1a, 4)
        assert g4 == fig1d
        assert edges_of(g4) == [[], [2, 3], [3]]

    def test_empty(self):
        assert t_adjacent(parse("5: "), 2) == Hypergraph(4, frozenset())

    def test_fig1b_gives_complete_graph(self, fig1b, k3):
        assert t_adjacent(fig1b, 4) == k3

    def test_relabels_in_order(self):
        g = parse("4: {1,2,4} {2,3} {2}")
        # removing vertex 2: {1,4} -> {1,3}, {3} -> {2}, {} stays
        assert t_adjacent(g, 2) == parse("3: {1,3} {2} {}")

    def test_one_vertex(self):
        assert t_adjacent(parse("1: {1}"), 1) == Hypergraph(0, frozenset({0}))

    @pytest.mark.parametrize("t", [0, 5, -1])
    def test_out_of_range(self, fig1a, t):
        with pytest.raises(HypergraphError):
            t_adjacent(fig1a, t)

    @given(hypergraphs(max_n=7))
    def test_structure(self, g):
        for t in range(1, g.n + 1):
            gt = t_adjacent(g, t)
            assert gt.n == g.n - 1
            assert all(e < (1 << gt.n) for e in gt.edges)
            assert gt.m == sum(1 for e in g.edges if e >> (t - 1) & 1)
            assert rank(gt) <= rank(g)
            top = [e for e in g.edges if bin(e).count("1") == rank(g)]
            if rank(g) >= 1 and all(e >> (t - 1) & 1 for e in top):
                assert rank(gt) == rank(g) - 1


class TestPredicates:
    def test_full_edge(self, fig1a):
        assert not contains_full_edge(fig1a)
        assert contains_full_edge(parse("3: {1,2,3}"))
        assert contains_full_edge(parse("1: {1}"))

    @given(hypergraphs(max_n=6))
    def test_full_edge_implies_rank_n(self, g):
        if contains_full_edge(g):
            assert rank(g) == g.n

    def test_is_graph(self, fig1a, fig1c):
        assert is_graph(fig1c)
        assert not is_graph(fig1a)
        assert is_graph(parse("4: "))
        assert not is_graph(parse("3: {} {1,2}"))


class TestLimits:
    def test_env_lowers_max_n(self, monkeypatch):
        monkeypatch.setenv("HYPERENT_MAX_N", "5")
        assert max_n() == 5
        with pytest.raises(HypergraphError):
            parse("6: ")

    def test_env_never_raises(self, monkeypatch):
        monkeypatch.setenv("HYPERENT_MAX_N", str(MAX_N + 10))
        assert max_n() == MAX_N

    def test_bad_mask(self):
        with pytest.raises(HypergraphError):
            Hypergraph(2, frozenset({0b100}))

    def test_immutable(self, fig1a):
        with pytest.raises(AttributeError):
            fig1a.n = 3
