"""The f-choosability decision procedure against the literal enumerator."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from densecolor.choosability import (
    check_pot_colorability_closure,
    has_induced_dk_choosable_subgraph,
    is_colorable_from_lists,
    is_dk_choosable,
    is_f_choosable,
    is_f_choosable_bruteforce,
    is_f_paintable,
    pot_cap,
)
from densecolor.corpus import nonisomorphic_graphs
from densecolor.errors import BoundExceededError
from densecolor.graphs import (
    bits,
    complete,
    cycle,
    empty_graph,
    from_edges,
    join,
    path,
    popcount,
)


def fs(*colors):
    return frozenset(colors)


class TestListColoring:
    def test_k3_examples(self):
        g = complete(3)
        assert is_colorable_from_lists(g, [fs(1, 2)] * 3) is None
        got = is_colorable_from_lists(g, [fs(1, 2), fs(1, 2), fs(3)])
        assert got is not None and got[2] == 3 and got[0] != got[1]

    def test_c4(self):
        got = is_colorable_from_lists(cycle(4), [fs(1, 2)] * 4)
        assert got == [1, 2, 1, 2] or (got is not None and got[0] != got[1])

    def test_colors_from_lists(self):
        rng = random.Random(12)
        for _ in range(100):
            n = rng.randint(1, 6)
            g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < 0.5])
            lists = [frozenset(rng.sample(range(1, 6), rng.randint(1, 3)))
                     for _ in range(n)]
            got = is_colorable_from_lists(g, lists)
            if got is not None:
                assert all(got[v] in lists[v] for v in range(n))
                assert all(got[u] != got[v] for u, v in g.edges())


class TestEngineAgainstBruteforce:
    def test_exhaustive_small(self):
        rng = random.Random(1)
        for n in range(1, 6):
            for g in nonisomorphic_graphs(n):
                for _ in range(2):
                    f = [rng.randint(0, max(0, g.degree(v))) for v in range(g.n)]
                    a = is_f_choosable(g, f)
                    b = is_f_choosable_bruteforce(g, f)
                    assert a.choosable == b.choosable, (g.edges(), f)

    @given(st.integers(min_value=1, max_value=5), st.data())
    @settings(max_examples=60, deadline=None)
    def test_property_agreement(self, n, data):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if data.draw(st.booleans())]
        g = from_edges(n, edges)
        f = [data.draw(st.integers(min_value=0, max_value=max(1, g.degree(v))))
             for v in range(n)]
        assert is_f_choosable(g, f).choosable == \
            is_f_choosable_bruteforce(g, f).choosable

    def test_witnesses_recheck(self):
        rng = random.Random(2)
        for n in range(1, 6):
            for g in nonisomorphic_graphs(n):
                f = [max(0, g.degree(v) - rng.randint(0, 1)) for v in range(g.n)]
                verdict = is_f_choosable(g, f)
                if not verdict.choosable:
                    assert verdict.witness is not None
                    assert [len(L) for L in verdict.witness] == f
                    assert is_colorable_from_lists(g, verdict.witness) is None


class TestSpecInstances:
    def test_dk_fixtures(self):
        assert is_dk_choosable(cycle(4), 0).choosable
        assert not is_dk_choosable(cycle(5), 0).choosable
        assert not is_dk_choosable(join(complete(4), empty_graph(3)), 1).choosable
        assert not is_dk_choosable(join(complete(5), empty_graph(3)), 1).choosable
        assert is_dk_choosable(join(complete(6), empty_graph(3)), 1).choosable
        assert is_dk_choosable(join(complete(2), empty_graph(2)), 0).choosable
        nested = join(complete(1), join(empty_graph(3), complete(4)))
        assert not is_dk_choosable(nested, 1).choosable

    def test_demand_flooring_empty_list(self):
        # an isolated vertex has d - k < 0; the floored demand 0 makes
        # every assignment trivially bad
        g = empty_graph(2)
        verdict = is_dk_choosable(g, 1)
        assert not verdict.choosable
        assert any(len(L) == 0 for L in verdict.witness)

    def test_bound_refused(self):
        with pytest.raises(BoundExceededError):
            is_f_choosable(empty_graph(11), [1] * 11)

    def test_pot_cap_rules(self):
        g = complete(4)
        assert pot_cap(g, [2, 2, 2, 2]) == 3
        assert pot_cap(g, [5, 2, 2, 2]) == 11   # some demand >= n: sum fallback


class TestInducedScan:
    def test_complete_none(self):
        assert has_induced_dk_choosable_subgraph(complete(7), 1) is None

    def test_even_cycle_is_found(self):
        mask = has_induced_dk_choosable_subgraph(cycle(6), 0)
        assert mask == (1 << 6) - 1     # only the whole even cycle qualifies

    def test_odd_cycle_absent(self):
        assert has_induced_dk_choosable_subgraph(cycle(5), 0) is None

    def test_found_subgraph_is_choosable(self):
        from densecolor.graphs import induced_subgraph

        g = join(complete(1), cycle(4))
        mask = has_induced_dk_choosable_subgraph(g, 0)
        assert mask is not None
        h, _ = induced_subgraph(g, mask)
        assert is_dk_choosable(h, 0).choosable


class TestPotClosure:
    def test_k3_singleton(self):
        g = complete(3)
        lists = [fs(1, 2)] * 3
        assert check_pot_colorability_closure(g, lists, fs(1))
        assert check_pot_colorability_closure(g, lists, fs(1, 2))

    def test_closure_on_witnesses(self):
        # every minimal-pot witness: colorings of G_S from L leave S
        for g in [cycle(5), join(complete(4), empty_graph(3))]:
            verdict = is_dk_choosable(g, 0 if g.n == 5 else 1)
            assert not verdict.choosable
            pot = set().union(*verdict.witness)
            lists = verdict.witness
            for color in sorted(pot):
                assert check_pot_colorability_closure(g, lists, fs(color))

    def test_rejects_empty_s(self):
        with pytest.raises(ValueError):
            check_pot_colorability_closure(complete(2), [fs(1), fs(1)], frozenset())


class TestPaintabilityCertificate:
    def test_sound_against_choosability(self):
        # paintable implies choosable; verify on every small graph
        rng = random.Random(3)
        for n in range(1, 5):
            for g in nonisomorphic_graphs(n):
                f = [rng.randint(1, max(1, g.degree(v) + 1)) for v in range(g.n)]
                paint = is_f_paintable(g, f)
                if paint is True:
                    assert is_f_choosable_bruteforce(g, f).choosable

    def test_known_values(self):
        assert is_f_paintable(cycle(4), [2, 2, 2, 2]) is True
        assert is_f_paintable(cycle(5), [2, 2, 2, 2, 2]) is False
