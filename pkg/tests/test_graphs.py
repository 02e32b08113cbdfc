"""Graph core: construction, formats, combinators, canonical keys."""

import pytest
from hypothesis import given, settings, strategies as st

from densecolor.errors import GraphFormatError
from densecolor.graphs import (
    Graph,
    bitmask,
    bits,
    blowup_cycle,
    canonical_key,
    complement,
    complete,
    connectivity,
    cycle,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_isomorphic,
    is_k_connected,
    join,
    neighborhood_graph,
    parse_dimacs_col,
    parse_edge_list,
    parse_graph6,
    path,
    petersen,
    popcount,
    serialize_graph6,
)


def decode_graph6_reference(text: str) -> tuple[int, set[tuple[int, int]]]:
    """Independent graph6 decoder used as the oracle for the parser."""
    s = text.strip()
    n = ord(s[0]) - 63
    bitstring = "".join(format(ord(c) - 63, "06b") for c in s[1:])
    edges = set()
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitstring[pos] == "1":
                edges.add((i, j))
            pos += 1
    return n, edges


@st.composite
def small_graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v))
    return from_edges(n, edges)


class TestGraph6:
    def test_k2(self):
        g = parse_graph6("A_")
        n, edges = decode_graph6_reference("A_")
        assert (g.n, set(g.edges())) == (n, edges) == (2, {(0, 1)})

    def test_triangle(self):
        g = parse_graph6("Bw")
        n, edges = decode_graph6_reference("Bw")
        assert g.n == n == 3
        assert set(g.edges()) == edges == {(0, 1), (0, 2), (1, 2)}

    def test_star_round_trip(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert serialize_graph6(g) == "D?{"
        assert sorted(g.degrees()) == [1, 1, 1, 1, 4]

    def test_header_allowed(self):
        assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")

    def test_reference_decoder_agreement_on_random_graphs(self):
        import random

        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(0, 12)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5])
            s = serialize_graph6(g)
            nn, edges = decode_graph6_reference(s)
            assert (nn, set(g.edges())) == (nn, edges)
            assert parse_graph6(s) == g

    @given(small_graphs())
    @settings(max_examples=300, deadline=None)
    def test_round_trip(self, g):
        assert parse_graph6(serialize_graph6(g)) == g

    def test_round_trip_large_sample(self):
        import random

        rng = random.Random(99)
        for _ in range(10_000):
            n = rng.randint(0, 10)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < rng.random()])
            assert parse_graph6(serialize_graph6(g)) == g

    def test_malformed(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("")
        with pytest.raises(GraphFormatError):
            parse_graph6("A_garbage")
        with pytest.raises(GraphFormatError):
            parse_graph6("B" + chr(30))
        with pytest.raises(GraphFormatError):
            parse_graph6("C")          # truncated body

    def test_large_order_prefix(self):
        g = empty_graph(100)
        assert parse_graph6(serialize_graph6(g)) == g


class TestOtherFormats:
    def test_dimacs(self):
        text = "c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"
        assert parse_dimacs_col(text) == path(4)
        with pytest.raises(GraphFormatError):
            parse_dimacs_col("e 1 2\n")
        with pytest.raises(GraphFormatError):
            parse_dimacs_col("p edge 2 1\ne 1 5\n")

    def test_edge_list(self):
        assert parse_edge_list("0 1\n1 2\n") == path(3)
        assert parse_edge_list("0 1", n=4).n == 4


class TestCombinators:
    def test_join_examples(self):
        w = join(complete(1), cycle(4))
        assert w.n == 5 and w.degree(0) == 4
        assert is_isomorphic(join(empty_graph(2), empty_graph(2)), cycle(4))
        assert join(complete(4), empty_graph(3)).size() == 6 + 0 + 12

    @given(small_graphs(max_n=8), small_graphs(max_n=8))
    @settings(max_examples=100, deadline=None)
    def test_join_size_formula(self, a, b):
        assert join(a, b).size() == a.size() + b.size() + a.n * b.n

    @given(small_graphs(max_n=8), small_graphs(max_n=8))
    @settings(max_examples=50, deadline=None)
    def test_join_degree_formula(self, a, b):
        j = join(a, b)
        for v in range(a.n):
            assert j.degree(v) == a.degree(v) + b.n
        for v in range(b.n):
            assert j.degree(a.n + v) == b.degree(v) + a.n

    def test_blowup_cycle(self):
        m8 = blowup_cycle(5, 3)
        assert m8.n == 15
        assert m8.size() == 5 * 3 + 5 * 9
        assert m8.is_regular() and m8.max_degree() == 8
        assert blowup_cycle(3, 1) == cycle(3)
        assert is_isomorphic(blowup_cycle(5, 1), cycle(5))
        with pytest.raises(ValueError):
            blowup_cycle(2, 1)
        with pytest.raises(ValueError):
            blowup_cycle(5, 0)

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g

    def test_average_degree(self):
        from fractions import Fraction

        assert complete(4).average_degree() == 3
        assert cycle(5).average_degree() == 2
        assert blowup_cycle(5, 3).average_degree() == 8
        assert join(complete(2), disjoint_union(complete(3), complete(3))).average_degree() \
            == Fraction(2 * 19, 8)
        with pytest.raises(ValueError):
            empty_graph(0).average_degree()


class TestSubgraphs:
    def test_neighborhood_examples(self):
        h, _ = neighborhood_graph(complete(5), 2)
        assert h == complete(4)
        h, _ = neighborhood_graph(cycle(5), 0)
        assert h == empty_graph(2)
        # each blown-up-cycle neighborhood is an edge joined to two triangles
        m8 = blowup_cycle(5, 3)
        for v in range(m8.n):
            h, kept = neighborhood_graph(m8, v)
            assert h.n == 8
            assert h.size() == 19
            expected = join(complete(2),
                            disjoint_union(complete(3), complete(3)))
            assert is_isomorphic(h, expected)

    @given(small_graphs())
    @settings(max_examples=100, deadline=None)
    def test_neighborhood_order_is_degree(self, g):
        for v in range(g.n):
            h, kept = neighborhood_graph(g, v)
            assert h.n == g.degree(v)
            assert all(g.has_edge(v, u) for u in kept)

    def test_induced_relabeling(self):
        g = path(5)
        h, kept = induced_subgraph(g, bitmask([0, 1, 3, 4]))
        assert kept == [0, 1, 3, 4]
        assert set(h.edges()) == {(0, 1), (2, 3)}

    def test_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            neighborhood_graph(complete(3), 5)


class TestConnectivity:
    def test_values(self):
        assert connectivity(complete(6)) == 5
        assert connectivity(cycle(5)) == 2
        assert connectivity(path(4)) == 1
        assert connectivity(disjoint_union(complete(2), complete(2))) == 0
        assert connectivity(petersen()) == 3
        assert is_k_connected(complete(4), 3)
        assert not is_k_connected(complete(4), 4)


class TestValidation:
    def test_rejects_loops_and_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, [0b10, 0b00])
        with pytest.raises(ValueError):
            Graph(1, [0b1])
        with pytest.raises(ValueError):
            from_edges(2, [(0, 0)])

    def test_immutable(self):
        g = complete(3)
        with pytest.raises(AttributeError):
            g.n = 5

    def test_degree_sum(self):
        g = petersen()
        assert sum(g.degrees()) == 2 * g.size()


class TestIsomorphism:
    def test_keys_match_known_pairs(self):
        assert canonical_key(cycle(4)) == canonical_key(
            from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]))
        assert canonical_key(path(4)) != canonical_key(cycle(4))
        assert is_isomorphic(petersen(), petersen())
        assert not is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))

    @given(small_graphs(max_n=7), st.permutations(range(7)))
    @settings(max_examples=100, deadline=None)
    def test_key_invariant_under_relabeling(self, g, perm):
        perm = list(perm[:g.n])
        if sorted(perm) != list(range(g.n)):
            return
        relabeled = from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_key(relabeled) == canonical_key(g)
