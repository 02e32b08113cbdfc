"""Exact oracles: chromatic number, cliques, criticality, strong coloring."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from densecolor.corpus import graphs_up_to, nonisomorphic_graphs
from densecolor.errors import BoundExceededError
from densecolor.graphs import (
    bitmask,
    blowup_cycle,
    complete,
    cycle,
    disjoint_union,
    empty_graph,
    from_edges,
    path,
    petersen,
    popcount,
)
from densecolor.oracles import (
    chromatic_number,
    chromatic_number_enumeration,
    chromatic_number_naive,
    clique_number,
    independence_number,
    invariant_report,
    is_critical_edge,
    is_proper_coloring,
    is_vertex_critical,
    kempe_component,
    maximal_cliques,
    maximal_cliques_at_least,
    omega_per_vertex,
    rho,
    strong_chromatic_check,
    vertex_critical_subgraph,
)

M8 = blowup_cycle(5, 3)


def pendant_k4():
    return from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])


class TestChromaticNumber:
    def test_fixtures(self):
        assert chromatic_number(complete(5))[0] == 5
        assert chromatic_number(cycle(5))[0] == 3
        chi, coloring = chromatic_number(M8)
        assert chi == 8
        assert is_proper_coloring(M8, coloring) and max(coloring) == 8

    def test_certificates_proper(self):
        for g in graphs_up_to(6):
            chi, coloring = chromatic_number(g)
            assert is_proper_coloring(g, coloring)
            assert max(coloring, default=0) == chi

    def test_three_oracles_agree_small(self):
        for g in graphs_up_to(5):
            chi = chromatic_number(g)[0]
            assert chi == chromatic_number_naive(g)
            assert chi == chromatic_number_enumeration(g)

    def test_naive_agrees_random(self):
        rng = random.Random(2)
        for _ in range(150):
            n = rng.randint(1, 8)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5])
            assert chromatic_number(g)[0] == chromatic_number_naive(g)

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            chromatic_number(empty_graph(40))
        with pytest.raises(BoundExceededError):
            chromatic_number_enumeration(empty_graph(7))


class TestCliques:
    def test_m8(self):
        assert clique_number(M8) == 6
        assert independence_number(M8) == 2

    def test_maximal_cliques_at_least(self):
        assert maximal_cliques_at_least(complete(7), 7) == [(1 << 7) - 1]
        assert maximal_cliques_at_least(cycle(5), 3) == []

    def test_bron_kerbosch_vs_bruteforce(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(1, 8)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5])
            got = {c for c in maximal_cliques(g)}
            # brute force: all maximal cliques by subset scan
            cliques = set()
            for size in range(1, n + 1):
                for combo in itertools.combinations(range(n), size):
                    if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                        cliques.add(bitmask(combo))
            maximal = {c for c in cliques
                       if not any(c != d and c & d == c for d in cliques)}
            assert got == maximal

    def test_petersen_alpha(self):
        assert independence_number(petersen()) == 4


class TestRho:
    def test_values(self):
        assert rho(complete(5)) == -1
        assert rho(cycle(5)) == 0
        assert rho(petersen()) == 1
        assert rho(M8) == 2
        with pytest.raises(ValueError):
            rho(empty_graph(0))

    def test_omega_per_vertex_definition(self):
        rng = random.Random(9)
        for _ in range(50):
            n = rng.randint(1, 7)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5])
            omegas = omega_per_vertex(g)
            for v in range(n):
                best = max(popcount(c) for c in maximal_cliques(g) if c >> v & 1)
                assert omegas[v] == best


class TestCriticality:
    def test_vertex_critical_examples(self):
        h, kept = vertex_critical_subgraph(cycle(5))
        assert h.n == 5 and h.size() == 5
        h, kept = vertex_critical_subgraph(pendant_k4())
        assert h == complete(4) and kept == [0, 1, 2, 3]
        h, _ = vertex_critical_subgraph(path(4))
        assert h == complete(2)

    def test_output_is_critical(self):
        rng = random.Random(4)
        for _ in range(30):
            n = rng.randint(1, 7)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5])
            h, _ = vertex_critical_subgraph(g)
            assert chromatic_number(h)[0] == chromatic_number(g)[0]
            assert is_vertex_critical(h)

    def test_critical_edges(self):
        assert is_critical_edge(cycle(5), (0, 1))
        assert is_critical_edge(complete(3), (0, 2))
        assert not is_critical_edge(pendant_k4(), (3, 4))
        with pytest.raises(ValueError):
            is_critical_edge(cycle(5), (0, 2))


class TestKempe:
    def test_path(self):
        g = path(3)
        assert kempe_component(g, [1, 2, 1], 0, 1) == bitmask([0, 1, 2])

    def test_disjoint_edges(self):
        g = from_edges(4, [(0, 1), (2, 3)])
        assert kempe_component(g, [1, 2, 1, 2], 0, 3) == bitmask([0, 1])

    def test_hexagon(self):
        g = cycle(6)
        assert kempe_component(g, [1, 2, 1, 2, 3, 4], 0, 1) == bitmask([0, 1, 2, 3])

    def test_rejects_improper(self):
        with pytest.raises(ValueError):
            kempe_component(complete(3), [1, 1, 2], 0, 2)


class TestStrongColoringOracle:
    def test_fixtures(self):
        assert strong_chromatic_check(complete(2), 2)
        assert not strong_chromatic_check(cycle(4), 2)
        assert strong_chromatic_check(empty_graph(4), 2)

    def test_monotone_in_r(self):
        for g in graphs_up_to(5):
            if g.n == 0:
                continue
            verdicts = [strong_chromatic_check(g, r) for r in range(1, 7)]
            # once true, stays true
            seen_true = False
            for v in verdicts:
                if seen_true:
                    assert v
                seen_true = seen_true or v

    def test_three_delta_small(self):
        for g in graphs_up_to(5):
            d = g.max_degree()
            if d < 1:
                continue
            assert strong_chromatic_check(g, 3 * d)

    def test_three_delta_full_corpus(self):
        # every graph with n <= 8 is strongly 3*Delta-colorable; with
        # Delta >= 3 the padded graph is a single block, so the expensive
        # cases are exactly the Delta <= 2 graphs on 7 or 8 vertices
        for g in graphs_up_to(8):
            d = g.max_degree()
            if d < 1:
                continue
            assert strong_chromatic_check(g, 3 * d), g.edges()


class TestInvariantReport:
    def test_band_small(self):
        for g in graphs_up_to(6):
            if g.n == 0:
                continue
            rep = invariant_report(g)
            assert rep.omega <= rep.chi <= rep.delta_max + 1

    def test_m8_report(self):
        rep = invariant_report(M8)
        assert (rep.chi, rep.omega, rep.alpha, rep.delta_max, rep.rho) == (8, 6, 2, 8, 2)
        assert rep.omega_v == [6] * 15
