import pytest

from conftest import random_hypergraph
from oracles import naive_berge_cycle_exists

from bergec4.berge import (
    Bc4FreeBuilder,
    BergeCycleWitness,
    BergePathWitness,
    WitnessError,
    find_berge_cycle,
    find_berge_path,
    is_bc4_free,
    verify_cycle_witness,
    verify_path_witness,
)
from bergec4.hypergraph import Hypergraph


class TestVerifyWitness:
    def test_k4_cycle_accepted(self, k4_full):
        w = BergeCycleWitness((0, 1, 2, 3), (0, 3, 2, 1))
        # edges: 0={0,1,2}, 3={1,2,3}, 2={0,2,3}, 1={0,1,3}
        assert verify_cycle_witness(k4_full, w)

    def test_repeated_edge_index_is_false(self, k4_full):
        w = BergeCycleWitness((0, 1, 2, 3), (0, 0, 2, 1))
        assert not verify_cycle_witness(k4_full, w)

    def test_repeated_vertex_is_false(self, k4_full):
        w = BergeCycleWitness((0, 1, 2, 1), (0, 3, 2, 1))
        assert not verify_cycle_witness(k4_full, w)

    def test_pair_not_inside_edge_is_false(self, k4_full):
        w = BergeCycleWitness((0, 1, 2, 3), (0, 1, 2, 3))
        # position 1 needs {1,2} inside edge 1 = {0,1,3}
        assert not verify_cycle_witness(k4_full, w)

    def test_out_of_range_raises(self, k4_minus):
        with pytest.raises(WitnessError):
            verify_cycle_witness(k4_minus, BergeCycleWitness((0, 1, 2, 3), (0, 1, 2, 7)))
        with pytest.raises(WitnessError):
            verify_cycle_witness(k4_minus, BergeCycleWitness((0, 1, 2, 9), (0, 1, 2, 2)))

    def test_too_short_is_false(self, k4_minus):
        assert not verify_cycle_witness(k4_minus, BergeCycleWitness((0,), (0,)))

    def test_path_witness(self, single_edge):
        assert verify_path_witness(single_edge, BergePathWitness((0, 1), (0,)))
        assert not verify_path_witness(single_edge, BergePathWitness((0, 0), (0,)))


class TestFindBergeCycle:
    def test_k4_has_c4(self, k4_full):
        w = find_berge_cycle(k4_full, 4)
        assert w is not None
        assert verify_cycle_witness(k4_full, w)

    def test_k4_minus_has_none(self, k4_minus):
        assert find_berge_cycle(k4_minus, 4) is None

    def test_three_edges_cannot_make_c4(self, three_edge_chain):
        assert find_berge_cycle(three_edge_chain, 4) is None

    def test_fewer_edges_than_length(self):
        h = Hypergraph(10, [(0, 1, 2), (3, 4, 5)])
        assert find_berge_cycle(h, 3) is None

    def test_length_two_is_shared_pair(self):
        h = Hypergraph(4, [(0, 1, 2), (0, 1, 3)])
        w = find_berge_cycle(h, 2)
        assert w is not None and verify_cycle_witness(h, w)
        assert w.vertices == (0, 1)
        lone = Hypergraph(4, [(0, 1, 2), (1, 2, 3)])
        # the two edges share only one pair each... {1,2} is shared
        assert find_berge_cycle(lone, 2) is not None
        disjointish = Hypergraph(6, [(0, 1, 2), (3, 4, 5)])
        assert find_berge_cycle(disjointish, 2) is None

    def test_bad_length(self, k4_full):
        with pytest.raises(ValueError):
            find_berge_cycle(k4_full, 1)

    def test_canonical_first_witness_is_stable(self, k4_full):
        a = find_berge_cycle(k4_full, 4)
        b = find_berge_cycle(k4_full, 4)
        assert a == b
        assert a.vertices == (0, 1, 2, 3)


class TestFindBergePath:
    def test_single_edge_length_one(self, single_edge):
        w = find_berge_path(single_edge, 1)
        assert w == BergePathWitness((0, 1), (0,))

    def test_two_edges_length_two(self):
        h = Hypergraph(5, [(0, 1, 2), (2, 3, 4)])
        w = find_berge_path(h, 2)
        assert w is not None
        assert verify_path_witness(h, w)

    def test_single_edge_length_two_is_none(self, single_edge):
        assert find_berge_path(single_edge, 2) is None

    def test_bad_length(self, single_edge):
        with pytest.raises(ValueError):
            find_berge_path(single_edge, 0)

    def test_found_paths_always_verify(self):
        for seed in range(20):
            h = random_hypergraph(8, 8, seed)
            for length in (1, 2, 3):
                w = find_berge_path(h, length)
                if w is not None:
                    assert verify_path_witness(h, w)


class TestIsBc4Free:
    def test_examples(self, k4_full, k4_minus):
        assert not is_bc4_free(k4_full)
        assert is_bc4_free(k4_minus)

    def test_oracle_equivalence_sample(self):
        # the full 200-instance run lives in the acceptance suite
        for seed in range(40):
            h = random_hypergraph(5 + seed % 5, 4 + seed % 9, seed)
            assert is_bc4_free(h) == (not naive_berge_cycle_exists(h, 4))

    def test_monotone_under_edge_addition(self):
        for seed in range(15):
            h = random_hypergraph(7, 8, seed)
            if is_bc4_free(h):
                continue
            for extra in ((0, 1, 2), (4, 5, 6)):
                if tuple(sorted(extra)) in h.edge_set:
                    continue
                bigger = Hypergraph(h.n, list(h.edges) + [extra])
                assert not is_bc4_free(bigger)

    def test_soundness_of_witnesses(self):
        for seed in range(30):
            h = random_hypergraph(8, 12, seed + 100)
            w = find_berge_cycle(h, 4)
            if w is not None:
                assert verify_cycle_witness(h, w)


class TestBc4FreeBuilder:
    def test_matches_full_detector(self):
        for seed in range(25):
            h = random_hypergraph(8, 14, seed)
            builder = Bc4FreeBuilder(h.n)
            kept = []
            for e in h.edges:
                accepted = builder.try_add(e)
                candidate = Hypergraph(h.n, kept + [e])
                assert accepted == is_bc4_free(candidate)
                if accepted:
                    kept.append(e)
            assert builder.to_hypergraph() == Hypergraph(h.n, kept)

    def test_pop_restores_state(self):
        builder = Bc4FreeBuilder(6)
        for e in ((0, 1, 2), (0, 1, 3), (2, 3, 4)):
            assert builder.try_add(e)
        before = builder.to_hypergraph()
        builder.add((1, 4, 5))
        builder.pop()
        assert builder.to_hypergraph() == before

    def test_would_create_cycle_leaves_builder_unchanged(self, k4_minus):
        builder = Bc4FreeBuilder(4)
        for e in k4_minus.edges:
            builder.try_add(e)
        before = builder.to_hypergraph()
        assert builder.would_create_cycle((1, 2, 3))
        assert builder.to_hypergraph() == before
