import pytest

from oracles import naive_berge_cycle_exists

from bergec4.berge import is_bc4_free
from bergec4.blocks import BlockType, decompose
from bergec4.construct import (
    BipartiteGraph,
    expand_to_hypergraph,
    is_c4_free,
    lower_bound_construction,
    projective_plane_incidence,
    random_bc4free,
)
from bergec4.hypergraph import Hypergraph


class TestProjectivePlane:
    def test_order_two_is_heawood_incidence(self):
        g = projective_plane_incidence(2)
        assert g.left_count == g.right_count == 7
        assert g.edge_count == 21
        assert is_c4_free(g)

    def test_order_three(self):
        g = projective_plane_incidence(3)
        assert g.left_count == 13 and g.edge_count == 52

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_counts_and_c4_freeness(self, q):
        g = projective_plane_incidence(q)
        count = q * q + q + 1
        assert g.left_count == g.right_count == count
        assert g.edge_count == (q + 1) * count
        assert is_c4_free(g)

    def test_every_line_has_q_plus_one_points(self):
        g = projective_plane_incidence(4)
        per_line = [0] * g.right_count
        for _, line in g.edges:
            per_line[line] += 1
        assert set(per_line) == {5}

    def test_prime_square_beyond_table(self):
        g = projective_plane_incidence(25)
        assert g.left_count == 651
        assert g.edge_count == 26 * 651

    @pytest.mark.parametrize("q", [0, 1, 6, 10, 12, 15, 27])
    def test_unsupported_orders_rejected(self, q):
        with pytest.raises(ValueError):
            projective_plane_incidence(q)


class TestExpand:
    def test_single_edge(self):
        g = BipartiteGraph(1, 1, ((0, 0),))
        h = expand_to_hypergraph(g, "right")
        assert h == Hypergraph(3, [(0, 1, 2)])

    def test_two_edge_path(self):
        g = BipartiteGraph(1, 2, ((0, 0), (0, 1)))
        h = expand_to_hypergraph(g, "right")
        assert h.n == 5 and h.edge_count == 2
        assert h == Hypergraph(5, [(0, 1, 3), (0, 2, 4)])

    def test_clone_left(self):
        g = BipartiteGraph(2, 1, ((0, 0), (1, 0)))
        h = expand_to_hypergraph(g, "left")
        # right keeps id 0; left originals 1,2; clones 3,4
        assert h == Hypergraph(5, [(0, 1, 3), (0, 2, 4)])

    def test_counts(self):
        g = projective_plane_incidence(2)
        h = expand_to_hypergraph(g, "right")
        assert h.n == 21 and h.edge_count == 21

    def test_bad_side(self):
        with pytest.raises(ValueError):
            expand_to_hypergraph(BipartiteGraph(1, 1, ((0, 0),)), "middle")


class TestLowerBoundConstruction:
    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_counts(self, q):
        h = lower_bound_construction(q)
        count = q * q + q + 1
        assert h.n == 3 * count
        assert h.edge_count == (q + 1) * count

    def test_q2_is_bc4_free_by_naive_oracle(self):
        h = lower_bound_construction(2)
        assert is_bc4_free(h)
        assert not naive_berge_cycle_exists(h, 4)

    def test_blocks_are_clone_pair_sunflowers(self, construction_family):
        for q, h in construction_family.items():
            decomposition = decompose(h)
            count = q * q + q + 1
            assert len(decomposition.blocks) == count
            for b in decomposition.blocks:
                assert b.classification is BlockType.TYPE1
                assert b.edge_count == q + 1
                common = set(h.edges[b.edge_indices[0]])
                for i in b.edge_indices[1:]:
                    common &= set(h.edges[i])
                assert len(common) == 2  # the clone pair pins the block


class TestRandomBc4Free:
    def test_reproducible(self):
        a = random_bc4free(15, 20, seed=99)
        b = random_bc4free(15, 20, seed=99)
        assert a == b

    def test_seed_changes_output(self):
        assert random_bc4free(15, 20, seed=1) != random_bc4free(15, 20, seed=2)

    def test_tiny_instance(self):
        assert random_bc4free(3, 5, seed=7).edge_count == 1

    def test_zero_target(self):
        h = random_bc4free(9, 0, seed=3)
        assert h.edge_count == 0 and h.n == 9

    def test_outputs_bc4_free(self):
        for seed in range(10):
            h = random_bc4free(10, 15, seed)
            assert is_bc4_free(h)
            assert not naive_berge_cycle_exists(h, 4)

    def test_target_respected(self):
        h = random_bc4free(20, 5, seed=0)
        assert h.edge_count == 5

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            random_bc4free(2, 1, 0)
        with pytest.raises(ValueError):
            random_bc4free(5, -1, 0)
