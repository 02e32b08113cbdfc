"""Theorem-verification suites over graph corpora.

Each suite evaluates a theorem's hypotheses and conclusion per graph with
the exact oracles, counts vacuous instances honestly, and collects red
alerts (hypotheses held, conclusion failed) carrying a graph6 string that
reproduces the instance in isolation.  Reports are plain dicts with a
stable schema so reruns under a fixed seed serialize byte-identically.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .choosability import (
    is_dk_choosable,
    is_f_choosable,
    is_f_choosable_bruteforce,
)
from .corpus import CorpusSpec, generate_corpus, graphs_up_to, nonisomorphic_graphs
from .decomposition import decompose_general, decompose_k1, threshold_U
from .errors import FalsificationError
from .graphs import (
    Graph,
    bits,
    complete,
    empty_graph,
    from_edges,
    is_isomorphic,
    join,
    neighborhood_graph,
    serialize_graph6,
)
from .oracles import (
    chromatic_number,
    chromatic_number_enumeration,
    chromatic_number_naive,
    clique_number,
    independence_number,
    is_proper_coloring,
    is_vertex_critical,
    omega_per_vertex,
)
from .recolorer import color_delta_minus_1, color_delta_minus_k, onesies_subgraph
from .strong_coloring import strong_color, verify_strong_coloring
from .transversal import (
    VertexPartition,
    find_independent_transversal,
    transversal_exists_naive,
    verify_certificate,
    verify_transversal,
)


@dataclass
class TheoremCheck:
    theorem_id: str
    graph_id: str
    hypotheses_hold: bool
    conclusion_holds: bool
    margins: dict = field(default_factory=dict)

    def is_alert(self) -> bool:
        return self.hypotheses_hold and not self.conclusion_holds


def order_bound_term(n: int) -> int:
    """ceil((15 + sqrt(48n + 73)) / 4) in exact integer arithmetic."""
    x = 48 * n + 73
    s = math.isqrt(x)
    if s * s == x:
        return (15 + s + 3) // 4
    return (15 + s) // 4 + 1


def _nbhd_avg_degree(g: Graph, v: int) -> Fraction:
    sub, _ = neighborhood_graph(g, v)
    return sub.average_degree() if sub.n else Fraction(0)


# ---------------------------------------------------------------------------
# per-graph theorem checks


def check_alpha_bound(g: Graph) -> TheoremCheck:
    chi, _ = chromatic_number(g)
    bound = max(clique_number(g), g.max_degree() - 1, 4 * independence_number(g))
    return TheoremCheck("alpha-bound", serialize_graph6(g), True, chi <= bound,
                        {"bound_minus_chi": str(bound - chi)})


def check_order_bound(g: Graph) -> TheoremCheck:
    chi, _ = chromatic_number(g)
    bound = max(clique_number(g), g.max_degree() - 1, order_bound_term(g.n))
    return TheoremCheck("order-bound", serialize_graph6(g), True, chi <= bound,
                        {"bound_minus_chi": str(bound - chi)})


def check_bk_dense(g: Graph) -> TheoremCheck:
    delta = g.max_degree()
    omega = clique_number(g)
    threshold = Fraction(2, 3) * delta + 4
    hyp = omega < delta and all(
        _nbhd_avg_degree(g, v) >= threshold for v in range(g.n))
    chi, _ = chromatic_number(g)
    concl = chi <= delta - 1 if hyp else True
    return TheoremCheck("bk-dense", serialize_graph6(g), hyp, concl,
                        {"threshold": str(threshold)})


def check_main_result(g: Graph, k: int) -> TheoremCheck:
    delta = g.max_degree()
    omega = clique_number(g)
    threshold = Fraction(6 * k * k, 6 * k * k + 1) * delta + k + 6
    hyp = omega <= delta - 2 * k and all(
        _nbhd_avg_degree(g, v) >= threshold for v in range(g.n))
    chi, _ = chromatic_number(g)
    concl = chi <= delta - k if hyp else True
    return TheoremCheck(f"main-result-k{k}", serialize_graph6(g), hyp, concl,
                        {"threshold": str(threshold)})


def check_two_thirds_clique(g: Graph) -> TheoremCheck:
    delta = g.max_degree()
    chi, _ = chromatic_number(g)
    if g.n == 0:
        return TheoremCheck("two-thirds-clique", serialize_graph6(g), False, True)
    omegas = omega_per_vertex(g)
    threshold = Fraction(2, 3) * delta + 2
    hyp = chi >= delta >= 9 and all(Fraction(o) >= threshold for o in omegas)
    concl = max(omegas) >= delta if hyp else True
    return TheoremCheck("two-thirds-clique", serialize_graph6(g), hyp, concl,
                        {"threshold": str(threshold)})


def check_main_simple_corollary(g: Graph, k: int) -> TheoremCheck:
    delta = g.max_degree()
    omega = clique_number(g)
    if g.n == 0:
        return TheoremCheck(f"main-simple-k{k}", serialize_graph6(g), False, True)
    omegas = omega_per_vertex(g)
    threshold = Fraction(2 * k, 2 * k + 1) * delta + 2 * k + 1
    hyp = omega <= delta - 2 * k and all(Fraction(o) >= threshold for o in omegas)
    chi, _ = chromatic_number(g)
    concl = chi <= delta - k if hyp else True
    return TheoremCheck(f"main-simple-k{k}", serialize_graph6(g), hyp, concl,
                        {"threshold": str(threshold)})


_DENSE_CHECKS = {
    "bk-dense": check_bk_dense,
    "main-result-k0": lambda g: check_main_result(g, 0),
    "main-result-k1": lambda g: check_main_result(g, 1),
    "main-result-k2": lambda g: check_main_result(g, 2),
    "two-thirds-clique": check_two_thirds_clique,
    "main-simple-k1": lambda g: check_main_simple_corollary(g, 1),
    "main-simple-k2": lambda g: check_main_simple_corollary(g, 2),
}


def _sweep(check, corpus, theorem: str, describe: str, jobs: int = 1) -> dict:
    checks: list[TheoremCheck] = []
    if jobs > 1:
        graphs = list(corpus)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(check, graphs, chunksize=64))
    else:
        checks = [check(g) for g in corpus]
    vacuous = sum(1 for c in checks if not c.hypotheses_hold)
    holds = sum(1 for c in checks if c.hypotheses_hold and c.conclusion_holds)
    alerts = [
        {"theorem": c.theorem_id, "graph": c.graph_id, "margins": c.margins}
        for c in checks if c.is_alert()
    ]
    return {
        "theorem": theorem,
        "corpus": describe,
        "counts": {"checked": len(checks), "vacuous": vacuous, "holds": holds},
        "alerts": alerts,
    }


def verify_alpha_bound(spec: CorpusSpec, jobs: int = 1) -> dict:
    return _sweep(check_alpha_bound, generate_corpus(spec),
                  "alpha-bound", spec.describe(), jobs)


def verify_order_bound(spec: CorpusSpec, jobs: int = 1) -> dict:
    return _sweep(check_order_bound, generate_corpus(spec),
                  "order-bound", spec.describe(), jobs)


def _check_all_dense(g: Graph) -> list[TheoremCheck]:
    return [fn(g) for fn in _DENSE_CHECKS.values()]


def verify_dense_neighborhood_theorems(spec: CorpusSpec, jobs: int = 1) -> dict:
    corpus = list(generate_corpus(spec))
    synthesized = _dense_neighborhood_family()
    graphs = corpus + synthesized
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            nested = list(pool.map(_check_all_dense, graphs, chunksize=16))
    else:
        nested = [_check_all_dense(g) for g in graphs]
    checks = [c for group in nested for c in group]
    vacuous = sum(1 for c in checks if not c.hypotheses_hold)
    holds = sum(1 for c in checks if c.hypotheses_hold and c.conclusion_holds)
    alerts = [{"theorem": c.theorem_id, "graph": c.graph_id, "margins": c.margins}
              for c in checks if c.is_alert()]
    return {
        "theorem": "dense-neighborhoods",
        "corpus": f"{spec.describe()} + {len(synthesized)} synthesized",
        "counts": {"checked": len(checks), "vacuous": vacuous, "holds": holds},
        "alerts": alerts,
    }


def _dense_neighborhood_family() -> list[Graph]:
    """Clique joins with Delta >= 9 where the hypotheses actually fire."""
    out = []
    for a in range(7, 12):
        out.append(complete(a))
        out.append(join(complete(a), empty_graph(1)))
        out.append(complete(a + 1).without_edge(0, 1))
        out.append(join(complete(a - 2), complete(2)).without_edge(0, a - 2))
    out.append(join(complete(5), cycle(5)))
    out.append(join(complete(7), cycle(5)))
    return out


# ---------------------------------------------------------------------------
# acceptance-grade suites


def oracle_cross_validation(max_n: int = 7, random_n: int = 8,
                            random_count: int = 1000, seed: int = 20240601) -> dict:
    """Branch-and-bound chi against the independent implementations."""
    mismatches = []
    checked = 0
    for g in graphs_up_to(max_n):
        chi = chromatic_number(g)[0]
        if chi != chromatic_number_naive(g):
            mismatches.append(serialize_graph6(g))
        if g.n <= 6 and chi != chromatic_number_enumeration(g):
            mismatches.append(serialize_graph6(g))
        checked += 1
    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.randint(2, random_n)
        g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                           if rng.random() < rng.choice((0.2, 0.5, 0.8))])
        if chromatic_number(g)[0] != chromatic_number_naive(g):
            mismatches.append(serialize_graph6(g))
        checked += 1
    return {
        "theorem": "oracle-cross-validation",
        "corpus": f"exhaustive n<={max_n} + {random_count} random n<={random_n}",
        "counts": {"checked": checked, "vacuous": 0,
                   "holds": checked - len(mismatches)},
        "alerts": [{"graph": s, "reason": "chi mismatch"} for s in mismatches],
    }


def m8_fixture() -> dict:
    """The 15-vertex blown-up five-cycle and its sharp invariants."""
    from .graphs import blowup_cycle

    g = blowup_cycle(5, 3)
    chi, coloring = chromatic_number(g)
    alpha = independence_number(g)
    values = {
        "n": g.n,
        "size": g.size(),
        "delta": g.max_degree(),
        "regular": g.is_regular(),
        "omega": clique_number(g),
        "alpha": alpha,
        "chi": chi,
        "coloring_proper": is_proper_coloring(g, coloring),
        "chi_lower_via_alpha": -(-g.n // alpha),
        "alpha_bound_tight": chi == 4 * alpha,
    }
    expected = {"n": 15, "size": 60, "delta": 8, "regular": True, "omega": 6,
                "alpha": 2, "chi": 8, "coloring_proper": True,
                "chi_lower_via_alpha": 8, "alpha_bound_tight": True}
    alerts = [{"field": k, "got": values[k], "want": expected[k]}
              for k in expected if values[k] != expected[k]]
    return {
        "theorem": "m8-fixture",
        "corpus": "blowup_cycle(5,3)",
        "counts": {"checked": len(expected), "vacuous": 0,
                   "holds": len(expected) - len(alerts)},
        "alerts": alerts,
        "values": {k: (str(v) if isinstance(v, Fraction) else v)
                   for k, v in values.items()},
    }


def strong_coloring_sweep(max_n: int = 8, partition_cap: int = 10_000,
                          seed: int = 7) -> dict:
    """Run the constructive strong coloring over every small graph and
    every (capped) partition into parts of size 3*Delta."""
    rng = random.Random(seed)
    instances = failures = capped = 0
    graphs_seen = 0
    for g in graphs_up_to(max_n):
        delta = g.max_degree()
        if delta < 1:
            continue
        graphs_seen += 1
        r = 3 * delta
        nparts = -(-g.n // r)
        parts_iter = _partitions_bounded(list(range(g.n)), r, nparts)
        chosen = list(itertools.islice(parts_iter, partition_cap + 1))
        if len(chosen) > partition_cap:
            capped += 1
            chosen = _random_partitions(g.n, r, nparts, partition_cap, rng)
        for blocks in chosen:
            p = VertexPartition.from_lists(g.n, blocks)
            res = strong_color(g, p, r)
            instances += 1
            if not verify_strong_coloring(g, p, r, res.coloring):
                failures += 1
    return {
        "theorem": "strong-coloring",
        "corpus": f"exhaustive n<={max_n}, parts of size 3*Delta, cap {partition_cap}",
        "counts": {"checked": instances, "vacuous": 0,
                   "holds": instances - failures},
        "alerts": [] if failures == 0 else [{"failures": failures}],
        "graphs": graphs_seen,
        "capped_graphs": capped,
    }


def _partitions_bounded(verts: list[int], r: int, nparts: int):
    if not verts:
        if nparts == 0:
            yield []
        return
    if nparts == 0 or len(verts) > r * nparts:
        return
    head, rest = verts[0], verts[1:]
    for size in range(0, min(r - 1, len(rest)) + 1):
        for others in itertools.combinations(rest, size):
            part = [head, *others]
            remaining = [v for v in rest if v not in others]
            for tail in _partitions_bounded(remaining, r, nparts - 1):
                yield [part, *tail]


def _random_partitions(n: int, r: int, nparts: int, count: int,
                       rng: random.Random) -> list[list[list[int]]]:
    out = []
    for _ in range(count):
        verts = list(range(n))
        rng.shuffle(verts)
        sizes = [r] * nparts
        excess = r * nparts - n
        i = 0
        while excess > 0:
            if sizes[i] > 1:
                sizes[i] -= 1
                excess -= 1
            i = (i + 1) % nparts
        blocks, pos = [], 0
        for s in sizes:
            blocks.append(verts[pos:pos + s])
            pos += s
        out.append(blocks)
    return out


def transversal_vs_naive(count: int = 10_000, seed: int = 7,
                         max_n: int = 10, max_blocks: int = 4) -> dict:
    rng = random.Random(seed)
    mismatches = bad_certs = certs = 0
    for _ in range(count):
        n = rng.randint(2, max_n)
        nb = rng.randint(1, min(max_blocks, n))
        verts = list(range(n))
        rng.shuffle(verts)
        cuts = sorted(rng.sample(range(1, n), nb - 1)) if nb > 1 else []
        blocks, prev = [], 0
        for c in cuts + [n]:
            blocks.append(verts[prev:c])
            prev = c
        g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                           if rng.random() < rng.choice((0.2, 0.4, 0.6))])
        p = VertexPartition.from_lists(n, blocks)
        out = find_independent_transversal(g, p)
        naive = transversal_exists_naive(g, p)
        if (out.transversal is not None) != naive:
            mismatches += 1
            continue
        if out.transversal is not None:
            if not verify_transversal(g, p, out.transversal):
                mismatches += 1
        else:
            certs += 1
            if not verify_certificate(g, p, out.certificate):
                bad_certs += 1
    return {
        "theorem": "transversal-vs-naive",
        "corpus": f"{count} random partitioned instances n<={max_n}",
        "counts": {"checked": count, "vacuous": 0,
                   "holds": count - mismatches - bad_certs},
        "alerts": ([] if mismatches == bad_certs == 0 else
                   [{"mismatches": mismatches, "bad_certificates": bad_certs}]),
        "certificates": certs,
    }


# ---------------------------------------------------------------------------
# choosability lemma table


def _claw() -> Graph:
    return from_edges(4, [(0, 1), (0, 2), (0, 3)])


def choosability_lemma_table(max_b: int = 5, neighborhood_max: int = 7,
                             smallpot_max: int = 7) -> dict:
    """The full instance table of the list-coloring lemmas."""
    failures: list[dict] = []
    counts: dict[str, int] = {}

    def record(suite: str, ok: bool, detail: str) -> None:
        counts[suite] = counts.get(suite, 0) + 1
        if not ok:
            failures.append({"suite": suite, "instance": detail})

    claw = _claw()
    e3 = empty_graph(3)

    # classification of K_t joins, t in {4, 5}
    for t in (4, 5):
        for n in range(1, max_b + 1):
            for b in nonisomorphic_graphs(n):
                got = is_dk_choosable(join(complete(t), b), 1).choosable
                expect_not = (clique_number(b) >= b.n - 1
                              or (t == 4 and (is_isomorphic(b, e3)
                                              or is_isomorphic(b, claw)))
                              or (t == 5 and is_isomorphic(b, e3)))
                record(f"kt-classification-t{t}", got == (not expect_not),
                       serialize_graph6(b))

    # mixed demands on a two-independent-vertex join
    for n in (4, 5):
        for a in nonisomorphic_graphs(n):
            g = join(empty_graph(2), a)
            comps = _components_of(a)
            for reps in itertools.product(*comps):
                profile = []
                for v in range(g.n):
                    base = g.degree(v) - 1
                    if v >= 2 and (v - 2) in reps:
                        base = g.degree(v)
                    profile.append(base)
                got = is_f_choosable(g, profile).choosable
                record("e2-join-with-some-low", got,
                       f"{serialize_graph6(a)} reps={reps}")

    # K_{3k+1} joins: failure forces a big clique (k = 1)
    for n in range(1, max_b + 1):
        for b in nonisomorphic_graphs(n):
            verdict = is_dk_choosable(join(complete(4), b), 1)
            ok = verdict.choosable or clique_number(b) >= b.n - 2
            record("general-clique-join-k1", ok, serialize_graph6(b))
            if not verdict.choosable and _is_cobipartite(b):
                record("two-cliques-k1", clique_number(b) >= b.n - 1,
                       serialize_graph6(b))

    # complete joins with independent sets
    record("big-independent-join",
           is_dk_choosable(join(complete(2), empty_graph(2)), 0).choosable,
           "K2+E2 k=0")
    record("big-independent-join",
           is_dk_choosable(join(complete(6), empty_graph(3)), 1).choosable,
           "K6+E3 k=1")

    # high minimum degree in a one-vertex join forces a big clique (k = 1)
    for n in range(1, 7):
        for b in nonisomorphic_graphs(n):
            if Fraction(b.min_degree()) < Fraction(3, 4) * b.n:
                continue
            verdict = is_dk_choosable(join(complete(1), b), 1)
            ok = verdict.choosable or clique_number(b) >= b.n - 2
            record("high-min-degree-k1", ok, serialize_graph6(b))

    # the neighborhood lemma: delta(B) >= (|B|+1)/2
    e3k4 = join(empty_graph(3), complete(4))
    for n in range(1, neighborhood_max + 1):
        for b in nonisomorphic_graphs(n):
            if Fraction(b.min_degree()) < Fraction(b.n + 1, 2):
                continue
            verdict = is_dk_choosable(join(complete(1), b), 1)
            ok = (verdict.choosable or clique_number(b) >= b.n - 1
                  or is_isomorphic(b, e3k4))
            record("neighborhood", ok, serialize_graph6(b))

    # small-pot dual enumeration: the n-1 pot cap and the trivial sum(f)
    # cap agree; fully independent brute force at n <= 4, the main engine
    # with explicit pot overrides up to n = 7
    rng = random.Random(11)
    for n in range(1, smallpot_max + 1):
        for g in nonisomorphic_graphs(n):
            profiles = [[max(0, g.degree(v)) for v in range(g.n)],
                        [max(0, g.degree(v) - 1) for v in range(g.n)]]
            for _ in range(2):
                profiles.append([rng.randint(1, max(1, g.n - 1))
                                 for _ in range(g.n)])
            for f in profiles:
                if not all(0 < fv < g.n for fv in f):
                    continue
                if n <= 4:
                    capped = is_f_choosable_bruteforce(g, f, pot=max(g.n - 1, max(f)))
                    uncapped = is_f_choosable_bruteforce(g, f, pot=sum(f))
                elif sum(f) <= 12:
                    capped = is_f_choosable(g, f, pot=max(g.n - 1, max(f)))
                    uncapped = is_f_choosable(g, f, pot=sum(f))
                else:
                    continue
                record("small-pot-dual", capped.choosable == uncapped.choosable,
                       f"{serialize_graph6(g)} f={f}")

    total = sum(counts.values())
    return {
        "theorem": "choosability-lemma-table",
        "corpus": f"joins over all graphs |B|<={max_b} "
                  f"(neighborhood |B|<={neighborhood_max})",
        "counts": {"checked": total, "vacuous": 0,
                   "holds": total - len(failures)},
        "alerts": failures,
        "suites": counts,
    }


def _components_of(g: Graph) -> list[list[int]]:
    from .graphs import connected_components

    return [sorted(bits(c)) for c in connected_components(g)]


def _is_cobipartite(g: Graph) -> bool:
    from .graphs import complement

    comp = complement(g)
    color = [0] * g.n
    for start in range(g.n):
        if color[start]:
            continue
        color[start] = 1
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(comp.adj[v]):
                if color[u] == 0:
                    color[u] = 3 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# decomposition fuzzing


def decomposition_fuzz(count: int = 1000, seed: int = 13) -> dict:
    """Synthesized overlapping-clique instances through both decomposers."""
    rng = random.Random(seed)
    checked = failures = 0
    alerts = []
    for trial in range(count):
        g, t, k, mode = _overlapping_clique_instance(rng)
        checked += 1
        try:
            if mode == "k1":
                deco = decompose_k1(g, t)
            else:
                deco = decompose_general(g, k, t)
            if t >= Fraction(2, 3) * (g.max_degree() + 1):
                from .decomposition import intersection_graph_is_cluster
                if not intersection_graph_is_cluster(g, t):
                    raise FalsificationError("X_t not clustered", {})
        except Exception as exc:
            failures += 1
            if len(alerts) < 10:
                alerts.append({"trial": trial, "mode": mode,
                               "graph": serialize_graph6(g), "error": str(exc)})
    return {
        "theorem": "decomposition-verifiers",
        "corpus": f"{count} synthesized overlapping-clique instances",
        "counts": {"checked": checked, "vacuous": 0,
                   "holds": checked - failures},
        "alerts": alerts,
    }


def _overlapping_clique_instance(rng: random.Random):
    """Disjoint big cliques, some with one attached vertex, plus light noise."""
    mode = rng.choice(("k1", "general"))
    k = 1 if mode == "k1" else rng.randint(1, 2)
    nblocks = rng.randint(1, 3)
    edges = []
    n = 0
    clique_sizes = []
    blocks = []
    size = rng.randint(max(8, 5 * k), 10 + 2 * k)
    for _ in range(nblocks):
        verts = list(range(n, n + size))
        edges.extend(itertools.combinations(verts, 2))
        n += size
        attach = rng.random() < 0.5
        if attach:
            x = n
            n += 1
            drop = rng.randint(0, 1)
            nbrs = verts[:size - drop]
            edges.extend((x, u) for u in nbrs)
            blocks.append((verts, x))
        else:
            blocks.append((verts, None))
        clique_sizes.append(size)
    g = from_edges(n, edges)
    delta = g.max_degree()
    if mode == "k1":
        t = min(max((delta + 5 + 1) // 2, size - 1), delta - 1)
        t = max(t, 2)
    else:
        t = threshold_U(k, clique_number(g), delta)
        if t > size:
            t = Fraction(size)
    return g, t, k, mode


# ---------------------------------------------------------------------------
# critical-graph sweeps


def onesies_sweep(max_n: int = 8) -> dict:
    checked = graphs_checked = 0
    alerts = []
    for g in graphs_up_to(max_n):
        if g.n == 0:
            continue
        chi, _ = chromatic_number(g)
        k = g.max_degree() + 1 - chi
        if k < 0 or not is_vertex_critical(g):
            continue
        graphs_checked += 1
        for v in range(g.n):
            checked += 1
            try:
                report = onesies_subgraph(g, v, k)
                if not report.holds():
                    alerts.append({"graph": serialize_graph6(g), "v": v,
                                   "margins": report.margins})
            except FalsificationError as exc:
                alerts.append({"graph": serialize_graph6(g), "v": v,
                               "error": str(exc)})
    return {
        "theorem": "onesies",
        "corpus": f"vertex-critical graphs with n<={max_n} "
                  f"({graphs_checked} graphs)",
        "counts": {"checked": checked, "vacuous": 0,
                   "holds": checked - len(alerts)},
        "alerts": alerts,
    }


def recolorer_family(seed: int = 5) -> dict:
    """Clique-join instances through both coloring procedures, with rates."""
    from .graphs import blowup_cycle, disjoint_union

    rng = random.Random(seed)
    graphs: list[tuple[str, Graph]] = []
    for j in (2, 3):
        graphs.append((f"blowup5x{j}", blowup_cycle(5, j)))
    for m in (9, 10, 11, 12):
        graphs.append((f"K{m}-e", complete(m).without_edge(0, 1)))
        graphs.append((f"K{m}-2e", complete(m).without_edge(0, 1).without_edge(2, 3)))
    for a in (8, 9, 10):
        graphs.append((f"K{a}+K1", join(complete(a), empty_graph(1))))
        graphs.append((f"K{a}+E2", join(complete(a), empty_graph(2))))
    for _ in range(30):
        base = rng.randint(8, 11)
        extra = rng.randint(1, 3)
        g = complete(base)
        for _ in range(extra):
            u, v = rng.sample(range(base), 2)
            g = g.without_edge(u, v) if g.has_edge(u, v) else g
        tail = rng.randint(0, 2)
        if tail:
            g = join(g, empty_graph(tail))
        if g.n <= 20 and g.max_degree() <= 12:
            graphs.append((f"rand{base}x{extra}t{tail}", g))

    checked = constructive = fallback = uncolorable = 0
    alerts = []
    for name, g in graphs:
        checked += 1
        res = color_delta_minus_1(g)
        if res.coloring is not None:
            if not is_proper_coloring(g, res.coloring) or max(res.coloring) > res.palette:
                alerts.append({"graph": serialize_graph6(g), "name": name,
                               "reason": "bad coloring"})
                continue
            chi, _ = chromatic_number(g)
            if chi > res.palette:
                alerts.append({"graph": serialize_graph6(g), "name": name,
                               "reason": "oracle disagrees"})
            if res.constructive:
                constructive += 1
            else:
                fallback += 1
        else:
            chi, _ = chromatic_number(g)
            if chi <= res.palette:
                alerts.append({"graph": serialize_graph6(g), "name": name,
                               "reason": "missed a colorable instance"})
            uncolorable += 1
    # the general procedure, exercising the palette-reduction branch
    general_checked = 0
    for name, g in graphs[:10]:
        gamma = g.max_degree() + 1
        res = color_delta_minus_k(g, 2, gamma)
        general_checked += 1
        if res.coloring is not None and (
                not is_proper_coloring(g, res.coloring)
                or max(res.coloring) > gamma - 2):
            alerts.append({"graph": serialize_graph6(g), "name": name,
                           "reason": "bad general coloring"})
    return {
        "theorem": "recolorer-family",
        "corpus": f"{checked} synthesized clique joins + {general_checked} general runs",
        "counts": {"checked": checked + general_checked, "vacuous": 0,
                   "holds": checked + general_checked - len(alerts)},
        "alerts": alerts,
        "rates": {
            "constructive": constructive,
            "oracle_fallback": fallback,
            "not_colorable": uncolorable,
        },
    }


# ---------------------------------------------------------------------------
# suite registry


def run_suite(name: str, max_n: int = 8, seed: int = 7, jobs: int = 1) -> dict:
    spec = CorpusSpec(source="exhaustive", max_n=max_n)
    if name == "alpha-bound":
        return verify_alpha_bound(spec, jobs)
    if name == "order-bound":
        return verify_order_bound(spec, jobs)
    if name == "dense-neighborhoods":
        return verify_dense_neighborhood_theorems(spec, jobs)
    if name == "oracle-cross":
        return oracle_cross_validation()
    if name == "m8":
        return m8_fixture()
    if name == "strong-color":
        return strong_coloring_sweep(max_n=max_n, seed=seed)
    if name == "transversal":
        return transversal_vs_naive(seed=seed)
    if name == "choosability":
        return choosability_lemma_table()
    if name == "decomposition":
        return decomposition_fuzz(seed=seed)
    if name == "onesies":
        return onesies_sweep(max_n=max_n)
    if name == "recolorer":
        return recolorer_family(seed=seed)
    raise ValueError(f"unknown suite {name!r}")


ALL_SUITES = ("oracle-cross", "m8", "alpha-bound", "order-bound",
              "dense-neighborhoods", "strong-color", "transversal",
              "choosability", "decomposition", "onesies", "recolorer")
