"""Thresholds, clique decompositions, dense subgraphs, neighborhood reports."""

import random
from fractions import Fraction

import pytest

from densecolor.decomposition import (
    big_clique_components,
    clique_from_dense_neighborhood,
    decompose_general,
    decompose_k1,
    intersection_graph_is_cluster,
    mader_dense_subgraph,
    threshold_U,
    threshold_U_prime,
)
from densecolor.errors import DecompositionError, HypothesisError
from densecolor.graphs import (
    bits,
    complete,
    cycle,
    disjoint_union,
    empty_graph,
    from_edges,
    is_k_connected,
    join,
    popcount,
)
from densecolor.oracles import clique_number


class TestThresholds:
    def test_paper_values(self):
        assert threshold_U(1, 7, 9) == Fraction(23, 3)
        assert threshold_U(1, 0, 0) == 3
        assert threshold_U_prime(1, 7, 9) == Fraction(31, 4)

    def test_uprime_dominates(self):
        rng = random.Random(8)
        for _ in range(200):
            k = rng.randint(1, 4)
            omega = rng.randint(0, 15)
            delta = rng.randint(0, 20)
            assert threshold_U_prime(k, omega, delta) >= threshold_U(k, omega, delta)

    def test_k_zero_rejected(self):
        with pytest.raises(ValueError):
            threshold_U(0, 3, 3)


class TestDecomposeK1:
    def test_k9_minus_edge(self):
        g = complete(9).without_edge(0, 1)
        deco = decompose_k1(g, 7)
        assert len(deco.blocks) == 1
        blk = deco.blocks[0]
        assert blk.x in (0, 1)
        assert popcount(blk.D) == 9
        assert popcount(blk.K) == 7

    def test_disjoint_cliques_flagged(self):
        g = disjoint_union(complete(7), complete(7))
        deco = decompose_k1(g, 6)
        assert len(deco.blocks) == 2
        assert deco.flags["delta_ge_8"] is False
        assert all(b.x is None for b in deco.blocks)

    def test_empty_c_t(self):
        assert decompose_k1(cycle(5), 4).blocks == []

    def test_moreover_clause_on_random_instances(self):
        rng = random.Random(21)
        for _ in range(40):
            size = rng.randint(8, 11)
            g = complete(size)
            if rng.random() < 0.5:
                x = size
                g = from_edges(size + 1,
                               list(g.edges()) + [(x, u) for u in range(size - 1)])
            t = size - 1
            deco = decompose_k1(g, t)
            for blk in deco.blocks:
                for v in bits(g.vertex_mask & ~blk.D):
                    assert popcount(g.adj[v] & blk.C) <= t - 2


class TestDecomposeGeneral:
    def test_single_clique(self):
        deco = decompose_general(complete(8), 1, 6)
        assert len(deco.blocks) == 1
        assert popcount(deco.blocks[0].K) == 8      # all universal

    def test_disjoint_cliques(self):
        g = disjoint_union(complete(9), complete(9))
        deco = decompose_general(g, 1, 8)
        assert len(deco.blocks) == 2

    def test_attached_vertex_instance(self):
        size = 9
        g = from_edges(size + 1,
                       list(complete(size).edges())
                       + [(size, u) for u in range(size - 1)])
        t = threshold_U(1, clique_number(g), g.max_degree())
        deco = decompose_general(g, 1, min(t, Fraction(size)))
        assert len(deco.blocks) == 1
        assert popcount(deco.blocks[0].K) >= 4

    def test_cluster_assertion(self):
        g = disjoint_union(complete(9), complete(9))
        assert intersection_graph_is_cluster(g, 8)


class TestMader:
    def test_complete_returned_whole(self):
        h, kept = mader_dense_subgraph(complete(6), 1)
        assert h == complete(6) and kept == list(range(6))

    def test_wheel_hypothesis_unmet(self):
        with pytest.raises(HypothesisError):
            mader_dense_subgraph(join(cycle(5), complete(1)), 1)

    def test_random_dense(self):
        rng = random.Random(31)
        found = 0
        for _ in range(25):
            n = rng.randint(8, 12)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.7])
            if g.n == 0 or g.average_degree() < 4:
                continue
            h, kept = mader_dense_subgraph(g, 1)
            assert is_k_connected(h, 2)
            assert h.average_degree() > g.average_degree() - 2
            found += 1
        assert found >= 10

    def test_two_blocks_glued_at_cut(self):
        # two K_6 sharing one vertex: 1-cut forces descent into a side
        shared = 0
        edges = list(complete(6).edges())
        offset = 5
        for u in range(1, 6):
            for v in range(u + 1, 6):
                edges.append((u + offset, v + offset))
        for u in range(1, 6):
            edges.append((shared, u + offset))
        g = from_edges(11, edges)
        h, kept = mader_dense_subgraph(g, 1)
        assert is_k_connected(h, 2)
        assert h.average_degree() > g.average_degree() - 2


class TestDenseNeighborhoodReport:
    def test_k5_hypotheses(self):
        rep = clique_from_dense_neighborhood(complete(5), 1)
        assert not rep.lemmas["low_vertex_high_average_degree"]["hypothesis_met"]
        assert not rep.lemmas["vertex_high_average_degree"]["hypothesis_met"]
        hm = rep.lemmas["high_min_degree_gives_clique"]
        assert hm["hypothesis_met"]
        assert hm["omega_bound_ok"]

    def test_dense_graph_has_witness(self):
        rng = random.Random(41)
        seen = 0
        for _ in range(30):
            n = rng.randint(6, 8)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.85])
            if g.n == 0:
                continue
            rep = clique_from_dense_neighborhood(g, 1)
            entry = rep.lemmas["low_vertex_high_average_degree"]
            if entry["hypothesis_met"]:
                assert entry["witness"]
                seen += 1
        assert seen >= 1

    def test_e3_join_k4_exception_family(self):
        b = join(empty_graph(3), complete(4))
        rep = clique_from_dense_neighborhood(b, 1)
        hm = rep.lemmas["high_min_degree_gives_clique"]
        # delta(B) = 4 < (3/4)*7: the min-degree lemma simply does not fire
        assert not hm["hypothesis_met"]
        assert rep.omega == 5
