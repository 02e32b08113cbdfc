"""Recoloring machinery: trade one color class for an independent transversal.

The core move: given a coloring of G - xw with x colored 1, shrink color
class 1 to a local minimum, collect for each remaining 1-colored vertex z
the neighbors whose color is unique in N(z), intersect those sets with the
clique decomposition's blocks, find an independent transversal of the
intersections avoiding N(x), and swap: transversal vertices take color 1,
each z takes its transversal vertex's old color.  When the graph is dense
enough around every vertex this bridges the missing edge and colors G with
the same palette.

Every stage can fall back to the exact coloring oracle; fallbacks are
flagged and stage-tagged, never silent.  A constructive failure while the
governing hypotheses hold aborts loudly instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .decomposition import decompose_k1, decompose_general, threshold_U_prime
from .errors import DecompositionError, FalsificationError, HypothesisError
from .graphs import Graph, bitmask, bits, induced_subgraph, popcount
from .oracles import (
    chromatic_number,
    clique_number,
    exists_coloring,
    is_proper_coloring,
    is_vertex_critical,
    independence_number,
    maximum_clique,
    omega_per_vertex,
    rho,
    vertex_critical_subgraph,
)
from .transversal import (
    VertexPartition,
    find_transversal_avoiding,
    find_transversal_with_anchor,
)


@dataclass
class RecolorOutcome:
    coloring: list[int] | None
    palette: int                     # number of colors promised
    constructive: bool               # machinery bridged the final edge
    flags: dict = field(default_factory=dict)
    stages: list[dict] = field(default_factory=list)

    def stage(self, tag: str, **data) -> None:
        self.stages.append({"stage": tag, **data})


def compute_Oz(g: Graph, coloring: list[int], z: int, exclude: int = 0) -> int:
    """Neighbors of z whose color is unique in N(z), as a bitmask.

    Vertices in ``exclude`` and uncolored vertices (color 0) are invisible.
    """
    nbrs = [v for v in bits(g.adj[z] & ~exclude) if coloring[v]]
    counts: dict[int, int] = {}
    for v in nbrs:
        counts[coloring[v]] = counts.get(coloring[v], 0) + 1
    return bitmask(v for v in nbrs if counts[coloring[v]] == 1)


def _shrink_class_one(g: Graph, coloring: list[int], palette: int,
                      keep: int) -> None:
    """Greedily recolor 1-colored vertices (except ``keep``) to a local minimum."""
    changed = True
    while changed:
        changed = False
        for z in range(g.n):
            if coloring[z] != 1 or z == keep:
                continue
            neighbor_colors = {coloring[u] for u in bits(g.adj[z])}
            for c in range(2, palette + 1):
                if c not in neighbor_colors:
                    coloring[z] = c
                    changed = True
                    break


def _class_one_properties(g: Graph, coloring: list[int], palette: int,
                          keep: int) -> bool:
    """Every non-keep 1-colored vertex must meet every other color class."""
    for z in range(g.n):
        if coloring[z] != 1 or z == keep:
            continue
        seen = {coloring[u] for u in bits(g.adj[z])}
        if any(c not in seen for c in range(2, palette + 1)):
            return False
    return True


def _extend_coloring(g: Graph, partial: dict[int, int], palette: int) -> list[int] | None:
    """Greedy completion of a partial coloring, highest-degree first."""
    colors = [partial.get(v, 0) for v in range(g.n)]
    todo = sorted((v for v in range(g.n) if colors[v] == 0),
                  key=g.degree, reverse=True)
    for v in todo:
        used = {colors[u] for u in bits(g.adj[v])}
        free = next((c for c in range(1, palette + 1) if c not in used), None)
        if free is None:
            return None
        colors[v] = free
    return colors


# ---------------------------------------------------------------------------
# the (Delta-1) procedure


def color_delta_minus_1(g: Graph, k: int | None = None) -> RecolorOutcome:
    """A proper (k-1)-coloring via the recoloring procedure, oracle fallback.

    k defaults to Delta(g).  Hypotheses (k >= 9, Delta <= k, omega < k,
    rho <= k/3 - 2) are recorded; the constructive path is attempted
    regardless and every abort carries a stage tag.
    """
    if k is None:
        k = g.max_degree()
    out = RecolorOutcome(coloring=None, palette=k - 1, constructive=False)
    delta = g.max_degree()
    omega = clique_number(g)
    out.flags = {
        "k_ge_9": k >= 9,
        "delta_le_k": delta <= k,
        "omega_lt_k": omega < k,
        "rho_ok": g.n > 0 and Fraction(rho(g)) <= Fraction(k, 3) - 2,
    }
    hypotheses = all(out.flags.values())
    out.stage("hypotheses", **{key: bool(val) for key, val in out.flags.items()})

    if delta < k:
        out.flags["delta_below_k"] = True

    constructive = _bridge_delta_minus_1(g, k, out) if delta == k else None
    if constructive is not None:
        out.coloring = constructive
        out.constructive = True
    else:
        out.stage("fallback_oracle")
        out.coloring = exists_coloring(g, k - 1)
        if out.coloring is not None:
            out.flags["oracle_fallback"] = True
    if out.coloring is None:
        if hypotheses:
            raise FalsificationError(
                "graph met the (k-1)-coloring hypotheses but is not (k-1)-colorable",
                {"k": k, "edges": g.edges()})
        out.flags["not_colorable"] = True
        return out
    assert is_proper_coloring(g, out.coloring)
    assert max(out.coloring) <= k - 1
    return out


def _bridge_delta_minus_1(g: Graph, k: int, out: RecolorOutcome) -> list[int] | None:
    """Run the constructive pipeline on the critical core; None on any bail."""
    core, kept = vertex_critical_subgraph(g)
    chi_core = chromatic_number(core)[0]
    out.stage("critical_subgraph", order=core.n, chi=chi_core)
    if core.n == 0 or chi_core > k:
        return None

    delta_core = core.max_degree()
    t = Fraction(2, 3) * delta_core + 1
    try:
        deco = decompose_k1(core, t)
    except DecompositionError as exc:
        out.stage("decomposition", failed=str(exc))
        return None
    out.stage("decomposition", blocks=len(deco.blocks),
              flags={key: str(val) for key, val in deco.flags.items()})
    if deco.covered() != core.vertex_mask:
        out.stage("decomposition", failed="blocks do not cover the core")
        return None

    swap = _recolor_swap(core, deco, palette=k - 1,
                         transversal_mode="avoiding",
                         avoid_t=Fraction(delta_core, 3) - 1,
                         rule="k1", pair_limit=2, out=out)
    if swap is None:
        return None
    partial = {kept[v]: c for v, c in enumerate(swap)}
    full = _extend_coloring(g, partial, k - 1)
    if full is None:
        out.stage("extension", failed="greedy extension stuck")
        return None
    out.stage("extension", added=g.n - core.n)
    return full


# ---------------------------------------------------------------------------
# the general (gamma - k) procedure


def color_delta_minus_k(g: Graph, k: int, gamma: int) -> RecolorOutcome:
    """A proper (gamma-k)-coloring via the general procedure, oracle fallback."""
    if k < 1:
        raise ValueError("k must be at least 1")
    delta = g.max_degree()
    omega = clique_number(g)
    out = RecolorOutcome(coloring=None, palette=gamma - k, constructive=False)
    uprime = threshold_U_prime(k, omega, gamma)
    out.flags = {
        "delta_le_gamma": delta <= gamma,
        "omega_ok": omega <= gamma - 2 * k,
        "rho_ok": g.n > 0 and Fraction(rho(g)) <= gamma - k - uprime,
    }
    hypotheses = all(out.flags.values())
    out.stage("hypotheses", **{key: bool(val) for key, val in out.flags.items()})

    coloring = None
    if delta < gamma:
        if k >= 2:
            out.stage("gamma_reduction", gamma=gamma - 1, k=k - 1)
            inner = color_delta_minus_k(g, k - 1, gamma - 1)
            out.stages.extend(inner.stages)
            out.flags["gamma_reduction"] = True
            coloring = inner.coloring
            out.constructive = inner.constructive
        else:
            out.stage("brooks_leaf")
            coloring = exists_coloring(g, gamma - 1)
            out.flags["brooks_leaf"] = True
    else:
        coloring = _bridge_delta_minus_k(g, k, out)
        if coloring is not None:
            out.constructive = True

    if coloring is None:
        out.stage("fallback_oracle")
        coloring = exists_coloring(g, gamma - k)
        if coloring is not None:
            out.flags["oracle_fallback"] = True
    if coloring is None:
        if hypotheses:
            raise FalsificationError(
                "graph met the (gamma-k)-coloring hypotheses but is not colorable",
                {"k": k, "gamma": gamma, "edges": g.edges()})
        out.flags["not_colorable"] = True
        return out
    out.coloring = coloring
    assert is_proper_coloring(g, coloring)
    assert max(coloring) <= gamma - k
    return out


def _bridge_delta_minus_k(g: Graph, k: int, out: RecolorOutcome) -> list[int] | None:
    core, kept = vertex_critical_subgraph(g)
    out.stage("critical_subgraph", order=core.n, chi=chromatic_number(core)[0])
    if core.n == 0:
        return None
    delta = core.max_degree()
    t = threshold_U_prime(k, clique_number(core), delta)
    try:
        deco = decompose_general(core, k, t)
    except (DecompositionError, FalsificationError) as exc:
        if isinstance(exc, FalsificationError):
            raise
        out.stage("decomposition", failed=str(exc))
        return None
    out.stage("decomposition", blocks=len(deco.blocks),
              flags={key: str(val) for key, val in deco.flags.items()})
    if deco.covered() != core.vertex_mask:
        out.stage("decomposition", failed="blocks do not cover the core")
        return None
    palette = core.max_degree() - k
    if palette < 1:
        out.stage("decomposition", failed="core too small for the palette")
        return None
    swap = _recolor_swap(core, deco, palette=palette,
                         transversal_mode="anchored", avoid_t=None,
                         rule="general", pair_limit=k + 1, out=out)
    if swap is None:
        return None
    partial = {kept[v]: c for v, c in enumerate(swap)}
    full = _extend_coloring(g, partial, out.palette)
    if full is None:
        out.stage("extension", failed="greedy extension stuck")
        return None
    out.stage("extension", added=g.n - core.n)
    return full


# ---------------------------------------------------------------------------
# the shared swap pipeline


def _recolor_swap(core: Graph, deco, palette: int, transversal_mode: str,
                  avoid_t: Fraction | None, rule: str, pair_limit: int,
                  out: RecolorOutcome) -> list[int] | None:
    """Stages: critical edge -> pi normalization -> Z/O/V -> transversal -> swap.

    ``rule`` picks the candidate-set construction: "k1" intersects a lone
    z's unique-color neighbors with the block's clique and a pair's with
    the universal part K (the pair must be the attached vertex plus a
    clique vertex outside K); "general" always intersects with the block's
    maximum clique.
    """
    pick = _pick_root_edge(core, deco)
    if pick is None:
        out.stage("critical_edge", failed="no block vertex with outside neighbor")
        return None
    block1, x, w = pick
    trimmed = core.without_edge(x, w)
    pi = exists_coloring(trimmed, palette)
    if pi is None:
        out.stage("critical_edge", x=x, w=w, failed="edge is not critical")
        return None
    out.stage("critical_edge", x=x, w=w)

    if pi[x] != 1:                   # rename so x's color is 1
        cx = pi[x]
        pi = [1 if c == cx else cx if c == 1 else c for c in pi]
    _shrink_class_one(trimmed, pi, palette, keep=x)
    if not _class_one_properties(trimmed, pi, palette, keep=x):
        out.stage("pi_normalization", failed="class-1 local minimum broken")
        return None
    zmask = bitmask(v for v in range(core.n) if pi[v] == 1 and v != x)
    if zmask & deco.blocks[block1].D:
        out.stage("pi_normalization", failed="class 1 met the root block")
        return None
    out.stage("pi_normalization", z=sorted(bits(zmask)))

    groups: dict[int, list[int]] = {}
    for z in bits(zmask):
        owner = next((i for i, blk in enumerate(deco.blocks) if blk.D >> z & 1), None)
        if owner is None:
            out.stage("zov_construction", failed=f"vertex {z} outside every block")
            return None
        groups.setdefault(owner, []).append(z)

    vsets: list[tuple[list[int], int]] = []    # (z group, V bitmask)
    for owner, zs in sorted(groups.items()):
        if len(zs) > pair_limit:
            out.stage("zov_construction",
                      failed=f"{len(zs)} class-1 vertices share a block")
            return None
        blk = deco.blocks[owner]
        if rule == "k1" and len(zs) == 2:
            in_c_minus_k = [z for z in zs if blk.C >> z & 1 and not blk.K >> z & 1]
            if blk.x not in zs or len(in_c_minus_k) != 1:
                out.stage("zov_construction",
                          failed=f"pair in block {owner} is not x plus a C-K vertex")
                return None
            common = blk.K
        elif rule == "k1":
            common = blk.C
        else:
            common = blk.C
        for z in zs:
            common &= compute_Oz(core, pi, z, exclude=1 << x)
        if common == 0:
            out.stage("zov_construction", failed=f"empty candidate set for block {owner}")
            return None
        vsets.append((zs, common))
    union = 0
    for _, mask in vsets:
        union |= mask
    out.stage("zov_construction", blocks=len(vsets),
              sizes=[popcount(m) for _, m in vsets])

    sub, sub_kept = induced_subgraph(core, union)
    index = {v: i for i, v in enumerate(sub_kept)}
    sub_blocks = tuple(bitmask(index[v] for v in bits(mask)) for _, mask in vsets)
    partition = VertexPartition(sub.n, sub_blocks)
    avoid = bitmask(index[v] for v in bits(core.adj[x] & union))
    if transversal_mode == "avoiding":
        res = find_transversal_avoiding(sub, partition, avoid, avoid_t)
    else:
        res = find_transversal_with_anchor(sub, partition, avoid)
    if res.transversal is None:
        out.stage("transversal", failed="no avoiding transversal",
                  hypotheses={key: str(val) for key, val in res.hypotheses.items()})
        return None
    chosen = [sub_kept[t] for t in res.transversal]
    out.stage("transversal", vertices=chosen, guaranteed=res.guaranteed)

    zeta = list(pi)
    for (zs, _), v in zip(vsets, chosen):
        for z in zs:
            zeta[z] = pi[v]
        zeta[v] = 1
    zeta[x] = 1
    if not is_proper_coloring(core, zeta) or max(zeta) > palette:
        out.stage("swap", failed="swap produced an improper coloring")
        return None
    out.stage("swap", ok=True)
    return zeta


def _pick_root_edge(core: Graph, deco) -> tuple[int, int, int] | None:
    """Lexicographically least (block, x in K, outside neighbor w)."""
    for i, blk in enumerate(deco.blocks):
        for x in bits(blk.K):
            outside = core.adj[x] & ~blk.D
            if outside:
                return i, x, next(bits(outside))
    return None


# ---------------------------------------------------------------------------
# uniquely-colored neighborhoods of critical graphs


@dataclass
class OnesiesReport:
    subgraph: Graph
    vertices: list[int]              # parent ids of the subgraph
    margins: dict = field(default_factory=dict)

    def holds(self) -> bool:
        return all(m is None or m >= 0 for m in self.margins.values())


def onesies_subgraph(g: Graph, v: int, k: int) -> OnesiesReport:
    """The uniquely-colored part of N(v) under a (Delta-k)-coloring of g-v.

    Requires g vertex-critical with chi = Delta + 1 - k (oracle-verified).
    Verifies the three guaranteed bounds (order, minimum degree, edge
    count) and reports the margins; a negative margin is a falsification.
    """
    delta = g.max_degree()
    chi, _ = chromatic_number(g)
    if chi != delta + 1 - k or not is_vertex_critical(g):
        raise HypothesisError(
            f"graph is not vertex-critical with chi = Delta+1-k (chi={chi}, "
            f"Delta={delta}, k={k})")
    rest, kept = induced_subgraph(g, g.vertex_mask & ~(1 << v))
    pi_rest = exists_coloring(rest, delta - k)
    assert pi_rest is not None, "criticality guarantees a (Delta-k)-coloring of g-v"
    pi = [0] * g.n
    for i, parent in enumerate(kept):
        pi[parent] = pi_rest[i]
    unique = compute_Oz(g, pi, v)
    sub, vertices = induced_subgraph(g, unique)
    alpha = independence_number(g)
    order_bound = delta - 2 * k
    margins = {"order": sub.n - order_bound}
    if sub.n:
        margins["min_degree"] = sub.min_degree() - (sub.n - (k + 1) * (alpha - 1) - 1)
        # edge bound in the form the degree-sum argument actually yields:
        # summing d(x) >= |H|-1-(k+1)(|class(x)|-1) over x in H gives twice
        # the size on the left and a 2*Delta+1 correction term
        margins["size"] = 2 * sub.size() - (sub.n * (sub.n - (k + 2))
                                            - (k + 1) * (g.n + 2 * k - (2 * delta + 1)))
    else:
        margins["min_degree"] = None
        margins["size"] = None
    report = OnesiesReport(sub, vertices, margins)
    if not report.holds():
        raise FalsificationError(
            "uniquely-colored neighborhood bound failed on a critical graph",
            {"v": v, "k": k, "margins": margins, "edges": g.edges()})
    return report


# ---------------------------------------------------------------------------
# reduction to irregular critical graphs


@dataclass
class IrregularReductionOutcome:
    kind: str                        # "clique" | "irregular_critical" | "not_found"
    clique: int | None = None        # bitmask when kind == "clique"
    subgraph: Graph | None = None    # when kind == "irregular_critical"
    vertices: list[int] | None = None
    flags: dict = field(default_factory=dict)
    stages: list[dict] = field(default_factory=list)


def irregular_reduction(g: Graph, k: int) -> IrregularReductionOutcome:
    """Either a K_k, or an irregular critical subgraph with chi = Delta = k-1.

    Requires chi(g) >= k and Delta(g) <= k (oracle-checked); with
    Delta < k the chromatic number forces chi = Delta + 1 and the clique
    branch must fire.  For k < 9 the theorem's range is flagged and the
    outcome is best-effort; inside the range a miss on both branches is a
    falsification.
    """
    delta = g.max_degree()
    chi, _ = chromatic_number(g)
    if delta > k or chi < k:
        raise HypothesisError(f"needs chi >= k >= Delta (chi={chi}, Delta={delta})")
    out = IrregularReductionOutcome(kind="not_found", flags={"k_in_range": k >= 9})

    big = maximum_clique(g)
    if popcount(big) >= k:
        out.kind = "clique"
        out.clique = big
        out.stages.append({"stage": "clique", "size": popcount(big)})
        return out
    if delta < k:
        # chi = Delta+1 forces a K_k by Brooks unless g is an odd cycle
        if k >= 9:
            raise FalsificationError(
                "chi exceeds Delta with no K_k", {"k": k, "edges": g.edges()})
        out.stages.append({"stage": "clique", "failed": "Delta below k, no K_k"})
        return out

    core, kept = vertex_critical_subgraph(g)
    out.stages.append({"stage": "critical_subgraph", "order": core.n})
    omegas = omega_per_vertex(core)
    lows = [v for v in range(core.n) if omegas[v] <= k - 2]
    if not lows:
        if k >= 9:
            raise FalsificationError(
                "every vertex in a (k-1)-clique yet no K_k found",
                {"k": k, "edges": g.edges()})
        out.stages.append({"stage": "low_vertex", "failed": "none available"})
        return out

    for v in lows:
        found = _irregular_from_vertex(core, v, k, out)
        if found is not None:
            sub, local = found
            out.kind = "irregular_critical"
            out.subgraph = sub
            out.vertices = [kept[i] for i in local]
            return out
    if k >= 9:
        raise FalsificationError(
            "no irregular critical subgraph extracted inside the theorem range",
            {"k": k, "edges": g.edges()})
    out.stages.append({"stage": "extraction", "failed": "all candidates exhausted"})
    return out


def _irregular_from_vertex(core: Graph, v: int, k: int, out) -> tuple[Graph, list[int]] | None:
    """Color core-v, drop the class T where v is doubly covered, criticalize."""
    rest, kept_rest = induced_subgraph(core, core.vertex_mask & ~(1 << v))
    pi_rest = exists_coloring(rest, k - 1)
    if pi_rest is None:
        return None
    pi = {kept_rest[i]: c for i, c in enumerate(pi_rest)}
    high = core.degree(v) == k
    counts: dict[int, int] = {}
    for u in bits(core.adj[v]):
        counts[pi[u]] = counts.get(pi[u], 0) + 1
    if high:
        doubles = [c for c, cnt in counts.items() if cnt == 2]
        if len(doubles) != 1 or len(counts) != k - 1:
            return None
        t_color = doubles[0]
    else:
        t_color = max(range(1, k), key=lambda c: sum(1 for u in pi if pi[u] == c))

    # grow T greedily: recolor vertices into it when properness allows,
    # keeping v's count in T intact
    t_class = {u for u in pi if pi[u] == t_color}
    grown = True
    while grown:
        grown = False
        for u in sorted(pi):
            if pi[u] == t_color or (high and core.adj[v] >> u & 1):
                continue
            if not any(core.adj[u] >> w & 1 for w in t_class):
                pi[u] = t_color
                t_class.add(u)
                grown = True
    h_mask = core.vertex_mask & ~bitmask(t_class)
    h, kept_h = induced_subgraph(core, h_mask)
    if h.max_degree() != k - 1:
        return None
    idx_v = kept_h.index(v)
    if h.degree(idx_v) != k - 2:
        return None
    crit, kept_crit = vertex_critical_subgraph(h)
    chi_crit, _ = chromatic_number(crit)
    if chi_crit != k - 1 or crit.max_degree() != k - 1 or crit.is_regular():
        return None
    if idx_v not in kept_crit:
        return None
    out.stages.append({"stage": "extraction", "v": v, "order": crit.n})
    return crit, [kept_h[i] for i in kept_crit]
