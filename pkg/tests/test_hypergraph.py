import pytest

from conftest import random_hypergraph
from oracles import naive_count_three_paths

from bergec4.hypergraph import (
    Hypergraph,
    HypergraphError,
    ParseError,
    ShadowGraph,
    count_three_paths,
    degree_profile,
    pair_to_edges,
    shadow,
)


class TestConstruction:
    def test_canonical_order(self):
        h = Hypergraph(5, [(4, 3, 2), (2, 1, 0)])
        assert h.edges == ((0, 1, 2), (2, 3, 4))

    def test_duplicate_edges_rejected(self):
        with pytest.raises(HypergraphError, match="duplicate"):
            Hypergraph(4, [(0, 1, 2), (2, 1, 0)])

    def test_non_triple_rejected(self):
        with pytest.raises(HypergraphError):
            Hypergraph(4, [(0, 1)])
        with pytest.raises(HypergraphError):
            Hypergraph(4, [(0, 1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(HypergraphError):
            Hypergraph(3, [(0, 1, 3)])
        with pytest.raises(HypergraphError):
            Hypergraph(-1, [])

    def test_equality_ignores_input_order(self):
        a = Hypergraph(5, [(0, 1, 2), (1, 2, 3)])
        b = Hypergraph(5, [(3, 2, 1), (2, 1, 0)])
        assert a == b and hash(a) == hash(b)

    def test_empty_allowed(self):
        h = Hypergraph(5, [])
        assert h.edge_count == 0
        assert shadow(h).edge_count == 0


class TestShadow:
    def test_single_edge_gives_triangle(self, single_edge):
        g = shadow(single_edge)
        assert g.pairs == ((0, 1), (0, 2), (1, 2))

    def test_k4_minus_gives_complete_graph(self, k4_minus):
        assert shadow(k4_minus).pairs == tuple(
            (x, y) for x in range(4) for y in range(x + 1, 4)
        )

    def test_vertex_count_preserved(self):
        g = shadow(Hypergraph(9, [(0, 1, 2)]))
        assert g.n == 9
        assert g.degree(8) == 0

    def test_pair_membership_matches_edges(self):
        for seed in range(10):
            h = random_hypergraph(9, 12, seed)
            g = shadow(h)
            for x in range(h.n):
                for y in range(x + 1, h.n):
                    covered = any(x in e and y in e for e in h.edges)
                    assert g.has_edge(x, y) == covered

    def test_determinism_through_serialization(self):
        for seed in range(5):
            h = random_hypergraph(8, 10, seed)
            assert shadow(Hypergraph.from_text(h.to_text())) == shadow(h)


class TestDegrees:
    def test_single_edge(self, single_edge):
        p = degree_profile(single_edge)
        assert p.hyper == (1, 1, 1)
        assert p.shadow == (2, 2, 2)
        assert p.excess == (1, 1, 1)
        assert p.block is None

    def test_k4_minus(self, k4_minus):
        p = degree_profile(k4_minus)
        assert p.hyper == (3, 2, 2, 2)
        assert p.shadow == (3, 3, 3, 3)
        assert p.excess == (0, 1, 1, 1)

    def test_sunflower_unit_excess(self, sunflower):
        assert degree_profile(sunflower).excess == (1, 1, 1, 1, 1)

    def test_degree_sums(self):
        for seed in range(20):
            h = random_hypergraph(10, 15, seed)
            g = shadow(h)
            p = degree_profile(h)
            assert sum(p.hyper) == 3 * h.edge_count
            assert sum(p.shadow) == 2 * g.edge_count

    def test_profile_inequalities(self):
        # distinct edges through v cover distinct neighbor pairs
        for seed in range(20):
            h = random_hypergraph(9, 14, seed)
            p = degree_profile(h)
            for v in range(h.n):
                if p.hyper[v] >= 1:
                    assert p.hyper[v] <= p.shadow[v] * (p.shadow[v] - 1) // 2
                    assert p.shadow[v] <= 2 * p.hyper[v]

    def test_excess_nonnegative_when_bc4_free(self):
        # false in general (six edges through one vertex over four neighbors
        # give hyper=6 > shadow=4), but guaranteed for BC4-free inputs
        from bergec4.berge import is_bc4_free
        from bergec4.construct import random_bc4free

        dense_star = Hypergraph(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 4), (0, 3, 4)])
        assert degree_profile(dense_star).excess[0] < 0
        assert not is_bc4_free(dense_star)
        for seed in range(20):
            h = random_bc4free(11, 14, seed)
            assert all(x >= 0 for x in degree_profile(h).excess)


class TestCountThreePaths:
    def test_triangle(self):
        g = ShadowGraph(3, [(0, 1), (0, 2), (1, 2)])
        assert count_three_paths(g) == 3

    def test_complete_four(self, k4_minus):
        assert count_three_paths(shadow(k4_minus)) == 12

    def test_empty(self):
        assert count_three_paths(ShadowGraph(5, [])) == 0

    def test_matches_enumeration_on_random_shadows(self):
        for seed in range(30):
            g = shadow(random_hypergraph(9, 13, seed))
            assert count_three_paths(g) == naive_count_three_paths(g)


class TestTextFormat:
    def test_round_trip(self):
        for seed in range(10):
            h = random_hypergraph(8, 9, seed)
            assert Hypergraph.from_text(h.to_text()) == h

    def test_comments_and_blank_lines(self):
        text = "# generated\n\n3 1\n# mid comment\n0 1 2\n"
        assert Hypergraph.from_text(text) == Hypergraph(3, [(0, 1, 2)])

    def test_unsorted_line_rejected_with_line_number(self):
        with pytest.raises(ParseError, match="line 2"):
            Hypergraph.from_text("3 1\n0 1 1\n")
        with pytest.raises(ParseError, match="line 3"):
            Hypergraph.from_text("4 2\n0 1 2\n2 1 3\n")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ParseError, match="duplicate"):
            Hypergraph.from_text("4 2\n0 1 2\n0 1 2\n")

    def test_wrong_edge_count(self):
        with pytest.raises(ParseError):
            Hypergraph.from_text("4 2\n0 1 2\n")
        with pytest.raises(ParseError):
            Hypergraph.from_text("4 1\n0 1 2\n0 1 3\n")

    def test_out_of_range_id(self):
        with pytest.raises(ParseError, match="range"):
            Hypergraph.from_text("3 1\n0 1 3\n")

    def test_header_errors(self):
        with pytest.raises(ParseError):
            Hypergraph.from_text("")
        with pytest.raises(ParseError):
            Hypergraph.from_text("3\n")

    def test_digest_is_stable(self, k4_minus):
        again = Hypergraph(4, [(0, 2, 3), (0, 1, 3), (0, 1, 2)])
        assert k4_minus.digest() == again.digest()
        assert k4_minus.digest().startswith("sha256:")


class TestIsolatedVertices:
    def test_detection(self):
        h = Hypergraph(6, [(1, 2, 4)])
        assert h.isolated_vertices() == (0, 3, 5)

    def test_compaction(self):
        h = Hypergraph(6, [(1, 2, 4)])
        assert h.without_isolated_vertices() == Hypergraph(3, [(0, 1, 2)])

    def test_no_change_when_covered(self, k4_minus):
        assert k4_minus.without_isolated_vertices() is k4_minus


def test_pair_to_edges_indexing(k4_minus):
    p2e = pair_to_edges(k4_minus)
    assert p2e[(0, 1)] == [0, 1]
    assert p2e[(2, 3)] == [2]
    assert p2e[(0, 2)] == [0, 2]
