"""Big-clique decompositions of graphs where every vertex sits in a big clique.

The maximal cliques of order at least t form an intersection graph X_t;
above the 2/3*(Delta+1) threshold X_t is a disjoint union of complete
graphs and its components' unions are the decomposition blocks.  Every
returned decomposition is verified against all of its defining conclusions
before it escapes this module; a verification failure with the hypotheses
intact is a falsification signal and aborts loudly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .choosability import CHOOSABILITY_BOUND, has_induced_dk_choosable_subgraph
from .errors import DecompositionError, FalsificationError, HypothesisError
from .graphs import (
    Graph,
    bitmask,
    bits,
    induced_subgraph,
    is_k_connected,
    popcount,
)
from .oracles import (
    clique_number,
    independence_number,
    maximal_cliques,
    maximal_cliques_at_least,
)


def threshold_U(k: int, omega: int, delta: int) -> Fraction:
    """Exact clique-size threshold for the general decomposition."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return max(
        Fraction(2, 3) * (delta + 1),
        Fraction(1, 2) * (delta + 3 * k + 2),
        Fraction(2 * k, 2 * k + 1) * (omega + k) - 1,
        Fraction(k + 1, k + 2) * omega + 2 * k + 1,
    )


def threshold_U_prime(k: int, omega: int, delta: int) -> Fraction:
    """threshold_U joined with the recoloring threshold (k+2)/(k+3)*Delta + 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return max(Fraction(k + 2, k + 3) * delta + 1, threshold_U(k, omega, delta))


@dataclass
class DecompositionBlock:
    D: int                       # block vertices
    C: int                       # the distinguished clique (max clique inside D)
    K: int                       # universal part: N(x) in C, or C itself / universal set
    x: int | None = None

    def to_dict(self) -> dict:
        return {
            "D": sorted(bits(self.D)),
            "C": sorted(bits(self.C)),
            "K": sorted(bits(self.K)),
            "x": self.x,
        }


@dataclass
class CliqueDecomposition:
    t: Fraction
    k: int
    blocks: list[DecompositionBlock]
    flags: dict = field(default_factory=dict)

    def covered(self) -> int:
        mask = 0
        for b in self.blocks:
            mask |= b.D
        return mask

    def to_dict(self) -> dict:
        return {
            "t": str(self.t),
            "k": self.k,
            "blocks": [b.to_dict() for b in self.blocks],
            "flags": {key: str(val) for key, val in self.flags.items()},
        }


def big_clique_components(g: Graph, t: int | Fraction) -> tuple[list[int], list[list[int]]]:
    """Maximal cliques of order >= t and the components of their intersection graph."""
    size = math.ceil(Fraction(t))
    cliques = sorted(maximal_cliques_at_least(g, size))
    m = len(cliques)
    seen = [False] * m
    comps = []
    for i in range(m):
        if seen[i]:
            continue
        comp = [i]
        seen[i] = True
        frontier = [i]
        while frontier:
            a = frontier.pop()
            for b in range(m):
                if not seen[b] and cliques[a] & cliques[b]:
                    seen[b] = True
                    comp.append(b)
                    frontier.append(b)
        comps.append(sorted(comp))
    return cliques, comps


def intersection_graph_is_cluster(g: Graph, t: int | Fraction) -> bool:
    """True iff X_t is a disjoint union of complete graphs."""
    cliques, comps = big_clique_components(g, t)
    for comp in comps:
        for a, b in itertools.combinations(comp, 2):
            if not cliques[a] & cliques[b]:
                return False
    return True


# ---------------------------------------------------------------------------
# k = 1 decomposition


def decompose_k1(g: Graph, t: int | Fraction,
                 scan_bound: int = CHOOSABILITY_BOUND) -> CliqueDecomposition:
    """Partition the union of the big cliques into blocks C or C + one vertex.

    Hypotheses (Delta >= 8, no K_Delta, (Delta+5)/2 <= t <= Delta-1, no
    induced d_1-choosable subgraph) are checked and recorded; violations
    are flagged and the construction still runs.  Structure or conclusion
    failures abort: loudly as falsifications when the hypotheses held,
    as DecompositionError otherwise.
    """
    delta = g.max_degree()
    flags = {
        "delta_ge_8": delta >= 8,
        "no_K_delta": delta == 0 or clique_number(g) < delta,
        "t_in_range": Fraction(delta + 5, 2) <= t <= delta - 1,
    }
    if g.n <= scan_bound:
        flags["in_D1"] = has_induced_dk_choosable_subgraph(g, 1, bound=scan_bound) is None
    else:
        flags["in_D1"] = None            # not checkable at this order
    # a falsification alert needs every hypothesis verified, membership included
    hypotheses_held = all(v is True for v in flags.values())

    cliques, comps = big_clique_components(g, t)
    blocks: list[DecompositionBlock] = []
    for comp in comps:
        if len(comp) == 1:
            c = cliques[comp[0]]
            blocks.append(DecompositionBlock(D=c, C=c, K=c, x=None))
            continue
        if len(comp) == 2:
            a, b = cliques[comp[0]], cliques[comp[1]]
            options = []
            for small, big in ((a, b), (b, a)):
                extra = small & ~big
                if popcount(extra) == 1:
                    x = next(bits(extra))
                    if popcount(g.adj[x] & big) >= t - 1:
                        options.append((big, x))
            if not options:
                _fail(hypotheses_held, "a two-clique component fits neither block form",
                      g, t, flags)
            big, x = min(options)
            blocks.append(DecompositionBlock(
                D=big | 1 << x, C=big, K=g.adj[x] & big, x=x))
            continue
        _fail(hypotheses_held,
              f"a component contains {len(comp)} pairwise-intersecting big cliques",
              g, t, flags)

    deco = CliqueDecomposition(t=Fraction(t), k=1, blocks=blocks, flags=flags)
    _verify_k1(g, t, deco, hypotheses_held)
    return deco


def _fail(hypotheses_held: bool, message: str, g: Graph, t, flags) -> None:
    state = {"t": str(t), "n": g.n, "edges": g.edges(), "flags": flags}
    if hypotheses_held:
        raise FalsificationError(message, state)
    raise DecompositionError(f"{message} (hypotheses were violated: {flags})")


def _verify_k1(g: Graph, t: int | Fraction, deco: CliqueDecomposition,
               hypotheses_held: bool) -> None:
    union = 0
    for blk in deco.blocks:
        if blk.D & union:
            _fail(hypotheses_held, "blocks overlap", g, t, deco.flags)
        union |= blk.D
    expected = 0
    for c in maximal_cliques_at_least(g, math.ceil(t)):
        expected |= c
    if union != expected:
        _fail(hypotheses_held, "blocks do not cover the big-clique union", g, t, deco.flags)
    for blk in deco.blocks:
        if blk.x is None:
            if not (blk.D == blk.C == blk.K and _is_clique(g, blk.C)):
                _fail(hypotheses_held, "plain block is not its clique", g, t, deco.flags)
        else:
            if blk.D != blk.C | 1 << blk.x or not _is_clique(g, blk.C):
                _fail(hypotheses_held, "extended block is not clique plus x", g, t, deco.flags)
            if popcount(g.adj[blk.x] & blk.C) < t - 1:
                _fail(hypotheses_held, "x has too few neighbors in its clique", g, t, deco.flags)
            if blk.K != g.adj[blk.x] & blk.C:
                _fail(hypotheses_held, "K is not N(x) within C", g, t, deco.flags)
        outside = g.vertex_mask & ~blk.D
        for v in bits(outside):
            if popcount(g.adj[v] & blk.C) > t - 2:
                _fail(hypotheses_held,
                      f"outside vertex {v} has more than t-2 neighbors in a clique",
                      g, t, deco.flags)


def _is_clique(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~g.adj[v] & ~(1 << v):
            return False
    return True


# ---------------------------------------------------------------------------
# general decomposition


def decompose_general(g: Graph, k: int, t: int | Fraction,
                      assume_in_Dk: bool = False,
                      scan_bound: int = CHOOSABILITY_BOUND) -> CliqueDecomposition:
    """Blocks from components of X_t, verified against all four conclusions."""
    if k < 1:
        raise ValueError("k must be at least 1")
    t = Fraction(t)
    delta = g.max_degree()
    omega = clique_number(g)
    flags = {"t_ge_U": t >= threshold_U(k, omega, delta)}
    if g.n <= scan_bound:
        flags["in_Dk"] = has_induced_dk_choosable_subgraph(g, k, bound=scan_bound) is None
    else:
        flags["in_Dk"] = True if assume_in_Dk else None
        flags["in_Dk_assumed"] = assume_in_Dk
    # an assumed (rather than scanner-verified) membership cannot back a
    # falsification alert; a conclusion failure then just refutes the assumption
    hypotheses_held = (flags["t_ge_U"] is True and flags["in_Dk"] is True
                       and not flags.get("in_Dk_assumed", False))

    cliques, comps = big_clique_components(g, t)
    if t >= Fraction(2, 3) * (delta + 1):
        for comp in comps:
            for a, b in itertools.combinations(comp, 2):
                if not cliques[a] & cliques[b]:
                    _fail(hypotheses_held,
                          "X_t is not a disjoint union of complete graphs "
                          "despite t >= (2/3)(Delta+1)", g, t, flags)

    blocks: list[DecompositionBlock] = []
    for comp in comps:
        d_mask = 0
        for i in comp:
            d_mask |= cliques[i]
        sub, kept = induced_subgraph(g, d_mask)
        local_omega = clique_number(sub)
        maxcliques = [c for c in maximal_cliques(sub) if popcount(c) == local_omega]
        best_local = min(maxcliques)
        c_mask = bitmask(kept[i] for i in bits(best_local))
        universal = bitmask(
            kept[v] for v in range(sub.n)
            if sub.adj[v] == sub.vertex_mask & ~(1 << v))
        blocks.append(DecompositionBlock(D=d_mask, C=c_mask, K=universal, x=None))

    deco = CliqueDecomposition(t=t, k=k, blocks=blocks, flags=flags)
    _verify_general(g, k, t, deco, hypotheses_held)
    return deco


def _verify_general(g: Graph, k: int, t: Fraction,
                    deco: CliqueDecomposition, hypotheses_held: bool) -> None:
    for blk in deco.blocks:
        sub, kept = induced_subgraph(g, blk.D)
        back = {v: i for i, v in enumerate(kept)}
        local_omega = clique_number(sub)
        if popcount(blk.D) > local_omega + 2 * k:
            _fail(hypotheses_held, "|D| exceeds omega(D) + 2k", g, t, deco.flags)
        if popcount(blk.K) < 3 * k + 1:
            _fail(hypotheses_held, "fewer than 3k+1 universal vertices", g, t, deco.flags)
        if independence_number(sub) > k + 1:
            _fail(hypotheses_held, "block independence number exceeds k+1", g, t, deco.flags)
        maxcliques = [c for c in maximal_cliques(sub) if popcount(c) == local_omega]
        members = [back[v] for v in bits(blk.D)]
        for size in range(1, k + 2):
            for combo in itertools.combinations(members, size):
                independent = all(
                    not sub.adj[u] >> v & 1
                    for u, v in itertools.combinations(combo, 2))
                if not independent:
                    continue
                common = sub.vertex_mask
                for v in combo:
                    common &= sub.adj[v]
                for clique in maxcliques:
                    need = local_omega - size * (local_omega + k - t)
                    if popcount(clique & common) < need:
                        _fail(hypotheses_held,
                              "max-clique intersection bound fails",
                              g, t, deco.flags)


# ---------------------------------------------------------------------------
# dense connected subgraphs


def mader_dense_subgraph(g: Graph, k: int,
                         exhaustive_bound: int = 16) -> tuple[Graph, list[int]]:
    """A (k+1)-connected induced subgraph with average degree above d(g) - 2k.

    Requires d(g) >= 4k.  Greedy peeling guided by vertex cuts, with an
    exhaustive sweep as the desk-scale backstop; the returned subgraph is
    independently rechecked for both properties.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0 or g.average_degree() < 4 * k:
        raise HypothesisError(f"average degree below 4k={4 * k}")
    target = g.average_degree() - 2 * k

    def dense_enough(mask: int) -> bool:
        sub, _ = induced_subgraph(g, mask)
        return sub.n > 0 and sub.average_degree() > target

    seen: set[int] = set()

    def search(mask: int) -> int | None:
        if mask in seen:
            return None
        seen.add(mask)
        sub, kept = induced_subgraph(g, mask)
        if sub.n == 0 or sub.average_degree() <= target:
            return None
        if is_k_connected(sub, k + 1):
            return mask
        moves: list[int] = []
        cut = _small_cut(sub, k)
        if cut is not None:
            cut_mask, comps = cut
            for comp in comps:
                moves.append(bitmask(kept[i] for i in bits(comp | cut_mask)))
        for v in range(sub.n):
            cand = mask & ~(1 << kept[v])
            if dense_enough(cand):
                moves.append(cand)
        for nxt in moves:
            if nxt != mask:
                found = search(nxt)
                if found is not None:
                    return found
        return None

    found = search(g.vertex_mask)
    if found is None and g.n <= exhaustive_bound:
        for size in range(g.n, 0, -1):
            for combo in itertools.combinations(range(g.n), size):
                mask = bitmask(combo)
                sub, _ = induced_subgraph(g, mask)
                if sub.average_degree() > target and is_k_connected(sub, k + 1):
                    found = mask
                    break
            if found is not None:
                break
    if found is None:
        raise FalsificationError(
            "no dense (k+1)-connected induced subgraph found despite d >= 4k",
            {"k": k, "edges": g.edges()})
    sub, kept = induced_subgraph(g, found)
    assert is_k_connected(sub, k + 1)
    assert sub.average_degree() > target
    return sub, kept


def _small_cut(g: Graph, k: int) -> tuple[int, list[int]] | None:
    """A vertex cut of size <= k and the components it leaves, if any."""
    from .graphs import connected_components, is_connected

    if not is_connected(g):
        return 0, connected_components(g)
    for size in range(1, k + 1):
        for combo in itertools.combinations(range(g.n), size):
            cut_mask = bitmask(combo)
            rest = g.vertex_mask & ~cut_mask
            if popcount(rest) > 1 and not is_connected(g, rest):
                return cut_mask, connected_components(g, rest)
    return None


# ---------------------------------------------------------------------------
# average degree in a vertex's neighborhood forces a big clique


@dataclass
class DenseNeighborhoodReport:
    order: int
    avg_degree: Fraction
    omega: int
    min_degree: int
    lemmas: dict = field(default_factory=dict)


def clique_from_dense_neighborhood(b: Graph, k: int = 1,
                                   bound: int = 8) -> DenseNeighborhoodReport:
    """Check the density-to-clique lemmas on ``b`` and report witnesses.

    For d(B) >= omega(B)+2 (and +3), an induced subgraph H whose one-vertex
    join is choosable at the lemma's demand profile is located by scanning;
    for the min-degree variant the clique lower bound is confirmed instead.
    A met hypothesis without the promised witness is a falsification.
    """
    if b.n > bound:
        raise HypothesisError(f"order {b.n} exceeds the scan bound {bound}")
    from .choosability import is_dk_choosable, is_f_choosable

    omega = clique_number(b)
    avg = b.average_degree() if b.n else Fraction(0)
    report = DenseNeighborhoodReport(
        order=b.n, avg_degree=avg, omega=omega, min_degree=b.min_degree())

    def join_k1(h: Graph) -> Graph:
        from .graphs import complete, join
        return join(complete(1), h)

    # d(B) >= omega + 2: some induced H has a choosable one-vertex join at
    # the mixed profile (full demand on the joined vertex, d-1 inside H)
    entry = {"hypothesis_met": avg >= omega + 2}
    if entry["hypothesis_met"]:
        witness = None
        for mask in sorted(range(1, 1 << b.n), key=popcount, reverse=True):
            h, kept = induced_subgraph(b, mask)
            joined = join_k1(h)
            profile = [joined.degree(0)] + [joined.degree(i) - 1
                                            for i in range(1, joined.n)]
            if is_f_choosable(joined, profile).choosable:
                witness = kept
                break
        if witness is None:
            raise FalsificationError(
                "dense graph lacks the promised mixed-choosable subgraph",
                {"edges": b.edges()})
        entry["witness"] = witness
    report.lemmas["low_vertex_high_average_degree"] = entry

    entry = {"hypothesis_met": avg >= omega + 3}
    if entry["hypothesis_met"]:
        witness = None
        for mask in sorted(range(1, 1 << b.n), key=popcount, reverse=True):
            h, kept = induced_subgraph(b, mask)
            if is_dk_choosable(join_k1(h), 1).choosable:
                witness = kept
                break
        if witness is None:
            raise FalsificationError(
                "dense graph lacks the promised d_1-choosable join subgraph",
                {"edges": b.edges()})
        entry["witness"] = witness
    report.lemmas["vertex_high_average_degree"] = entry

    threshold = Fraction(2 * k + 1, 2 * k + 2) * b.n + k - 1
    entry = {"hypothesis_met": b.n > 0 and b.min_degree() >= threshold}
    if entry["hypothesis_met"]:
        verdict = is_dk_choosable(join_k1(b), k)
        entry["join_choosable"] = verdict.choosable
        if not verdict.choosable:
            entry["omega_bound_ok"] = omega >= b.n - 2 * k
            if not entry["omega_bound_ok"]:
                raise FalsificationError(
                    "min-degree hypothesis met, join not choosable, clique bound fails",
                    {"edges": b.edges(), "k": k})
    report.lemmas["high_min_degree_gives_clique"] = entry
    return report
