"""Exact brute-force oracles for the invariants the theorems mention.

Everything here is ground truth for the rest of the library: chromatic
number by DSATUR-guided branch and bound (with two independent slower
implementations for cross-checks), maximal cliques by Bron-Kerbosch with
pivoting, independence number on the complement, local clique sizes,
criticality tests, Kempe components and exhaustive strong-colorability.

Colorings are lists indexed by vertex with colors 1..r.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BoundExceededError
from .graphs import Graph, bits, bitmask, complement, popcount, subgraph_without_vertex

EXHAUSTIVE_BOUND = 32


def is_proper_coloring(g: Graph, coloring: list[int]) -> bool:
    if len(coloring) != g.n:
        return False
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# cliques


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    out: list[int] = []
    adj = g.adj

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            if r:
                out.append(r)
            return
        pivot, best = -1, -1
        for u in bits(p | x):
            c = popcount(p & adj[u])
            if c > best:
                best, pivot = c, u
        for v in bits(p & ~adj[pivot]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.vertex_mask, 0)
    return out


def clique_number(g: Graph) -> int:
    return max((popcount(c) for c in maximal_cliques(g)), default=0)


def maximum_clique(g: Graph) -> int:
    """One maximum clique as a bitmask (lexicographically least among ties)."""
    best = 0
    for c in sorted(maximal_cliques(g)):
        if popcount(c) > popcount(best):
            best = c
    return best


def maximal_cliques_at_least(g: Graph, t: int) -> list[int]:
    """The set C_t: maximal cliques on at least t vertices."""
    return [c for c in maximal_cliques(g) if popcount(c) >= t]


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def maximum_independent_set(g: Graph) -> int:
    return maximum_clique(complement(g))


def omega_per_vertex(g: Graph) -> list[int]:
    """omega(v): order of a largest clique containing v."""
    best = [1] * g.n if g.n else []
    for c in maximal_cliques(g):
        size = popcount(c)
        for v in bits(c):
            if size > best[v]:
                best[v] = size
    return best


def rho(g: Graph) -> int:
    """max over v of d(v) - omega(v); signed, so K_n gives -1."""
    if g.n == 0:
        raise ValueError("rho of the empty graph is undefined")
    omegas = omega_per_vertex(g)
    return max(g.degree(v) - omegas[v] for v in range(g.n))


# ---------------------------------------------------------------------------
# chromatic number


def _greedy_coloring(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    colors = [0] * g.n
    for v in order:
        used = 0
        for u in bits(g.adj[v]):
            if colors[u]:
                used |= 1 << (colors[u] - 1)
        c = 1
        while used >> (c - 1) & 1:
            c += 1
        colors[v] = c
    return colors


def exists_coloring(g: Graph, k: int, seed_clique: int = 0) -> list[int] | None:
    """Proper k-coloring via DSATUR-ordered backtracking, or None.

    ``seed_clique`` vertices are pre-colored 1,2,...; new colors are only
    opened in increasing order, which breaks color symmetry.
    """
    n = g.n
    if k < 0:
        return None
    colors = [0] * n
    neighbor_colors = [0] * n
    max_used = 0
    for i, v in enumerate(bits(seed_clique), start=1):
        if i > k:
            return None
        colors[v] = i
        max_used = i
        for u in bits(g.adj[v]):
            neighbor_colors[u] |= 1 << (i - 1)
    colored = popcount(seed_clique)
    adj = g.adj
    degs = g.degrees()

    def rec(colored: int, max_used: int) -> bool:
        if colored == n:
            return True
        v, best = -1, (-1, -1)
        for u in range(n):
            if colors[u] == 0:
                key = (popcount(neighbor_colors[u]), degs[u])
                if key > best:
                    best, v = key, u
        limit = min(k, max_used + 1)
        avail = ~neighbor_colors[v] & ((1 << limit) - 1)
        for cbit in bits(avail):
            c = cbit + 1
            colors[v] = c
            touched = []
            mask = 1 << cbit
            for u in bits(adj[v]):
                if colors[u] == 0 and not neighbor_colors[u] & mask:
                    neighbor_colors[u] |= mask
                    touched.append(u)
            if rec(colored + 1, max(max_used, c)):
                return True
            colors[v] = 0
            for u in touched:
                neighbor_colors[u] &= ~mask
        return False

    if rec(colored, max_used):
        return colors
    return None


def chromatic_number(g: Graph, bound: int = EXHAUSTIVE_BOUND) -> tuple[int, list[int]]:
    """Exact chromatic number with a certificate coloring."""
    if g.n > bound:
        raise BoundExceededError(f"graph order {g.n} exceeds exhaustive bound {bound}")
    if g.n == 0:
        return 0, []
    clique = maximum_clique(g)
    lb = popcount(clique)
    greedy = _greedy_coloring(g)
    ub = max(greedy)
    if lb == ub:
        return ub, greedy
    for k in range(lb, ub):
        coloring = exists_coloring(g, k, seed_clique=clique)
        if coloring is not None:
            return k, coloring
    return ub, greedy


def chromatic_number_naive(g: Graph) -> int:
    """Independent cross-check: plain fixed-order backtracking, no heuristics."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    colors = [0] * n

    def rec(v: int, r: int) -> bool:
        if v == n:
            return True
        for c in range(1, r + 1):
            ok = True
            for u in bits(adj[v] & ((1 << v) - 1)):
                if colors[u] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                if rec(v + 1, r):
                    return True
        colors[v] = 0
        return False

    for r in range(1, n + 1):
        if rec(0, r):
            return r
    return n


def chromatic_number_enumeration(g: Graph) -> int:
    """Second cross-check: literal enumeration of all r^n assignments (n <= 6)."""
    if g.n > 6:
        raise BoundExceededError("literal enumeration is capped at n <= 6")
    if g.n == 0:
        return 0
    edges = g.edges()
    for r in range(1, g.n + 1):
        for assignment in itertools.product(range(r), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                return r
    return g.n


# ---------------------------------------------------------------------------
# criticality


def vertex_critical_subgraph(g: Graph, bound: int = EXHAUSTIVE_BOUND) -> tuple[Graph, list[int]]:
    """An induced H with chi(H) = chi(g) and chi(H - v) < chi(H) for all v.

    Returns the subgraph and the list of parent vertices kept.
    """
    chi, _ = chromatic_number(g, bound)
    current = g
    mapping = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in range(current.n):
            h, kept = subgraph_without_vertex(current, v)
            if chromatic_number(h, bound)[0] == chi:
                current = h
                mapping = [mapping[i] for i in kept]
                changed = True
                break
    return current, mapping


def is_vertex_critical(g: Graph, bound: int = EXHAUSTIVE_BOUND) -> bool:
    chi, _ = chromatic_number(g, bound)
    for v in range(g.n):
        h, _ = subgraph_without_vertex(g, v)
        if chromatic_number(h, bound)[0] >= chi:
            return False
    return True


def is_critical_edge(g: Graph, e: tuple[int, int], bound: int = EXHAUSTIVE_BOUND) -> bool:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    chi, _ = chromatic_number(g, bound)
    return chromatic_number(g.without_edge(u, v), bound)[0] < chi


# ---------------------------------------------------------------------------
# Kempe components


def kempe_component(g: Graph, coloring: list[int], x: int, y: int) -> int:
    """x's component in the subgraph induced by the color classes of x and y."""
    if not is_proper_coloring(g, coloring):
        raise ValueError("coloring is not proper")
    two = {coloring[x], coloring[y]}
    mask = bitmask(v for v in range(g.n) if coloring[v] in two)
    seen = 1 << x
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen


# ---------------------------------------------------------------------------
# strong colorability (exhaustive oracle)


def _pad_to_multiple(g: Graph, r: int) -> Graph:
    deficit = (-g.n) % r
    if deficit == 0:
        return g
    return Graph(g.n + deficit, list(g.adj) + [0] * deficit)


def _partitions_into_parts(vertices: list[int], r: int):
    """Canonical unordered partitions into parts of size exactly r."""
    if not vertices:
        yield []
        return
    head, rest = vertices[0], vertices[1:]
    for others in itertools.combinations(rest, r - 1):
        part = [head, *others]
        remaining = [v for v in rest if v not in others]
        for tail in _partitions_into_parts(remaining, r):
            yield [part, *tail]


def _exists_strong_coloring(g: Graph, blocks: list[list[int]], r: int) -> bool:
    """Proper coloring using all r colors on each block; colors canonical."""
    colors = [0] * g.n
    block_used = [0] * len(blocks)
    flat = [(bi, v) for bi, block in enumerate(blocks) for v in block]
    # first block fixed to 1..r (color symmetry)
    for i, v in enumerate(blocks[0], start=1):
        colors[v] = i
    block_used[0] = (1 << r) - 1
    start = len(blocks[0])
    for _, v in flat[:start]:
        for u in bits(g.adj[v]):
            if colors[u] and colors[u] == colors[v]:
                return False

    def rec(pos: int) -> bool:
        if pos == len(flat):
            return True
        bi, v = flat[pos]
        forbidden = block_used[bi]
        for u in bits(g.adj[v]):
            if colors[u]:
                forbidden |= 1 << (colors[u] - 1)
        for cbit in bits(~forbidden & ((1 << r) - 1)):
            colors[v] = cbit + 1
            block_used[bi] |= 1 << cbit
            if rec(pos + 1):
                return True
            block_used[bi] &= ~(1 << cbit)
            colors[v] = 0
        return False

    return rec(start)


def strong_chromatic_check(g: Graph, r: int, max_padded: int = 24) -> bool:
    """True iff g is strongly r-colorable: every size-r partition of the
    padded graph admits a proper coloring using all r colors on each part."""
    if r < 1:
        raise ValueError("r must be positive")
    padded = _pad_to_multiple(g, r)
    if padded.n > max_padded:
        raise BoundExceededError(
            f"padded order {padded.n} exceeds strong-coloring bound {max_padded}")
    for blocks in _partitions_into_parts(list(range(padded.n)), r):
        if not _exists_strong_coloring(padded, blocks, r):
            return False
    return True


# ---------------------------------------------------------------------------
# invariant report


@dataclass
class InvariantReport:
    chi: int
    omega: int
    alpha: int
    delta_max: int
    delta_min: int
    rho: int
    omega_v: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "chi": self.chi,
            "omega": self.omega,
            "alpha": self.alpha,
            "delta_max": self.delta_max,
            "delta_min": self.delta_min,
            "rho": self.rho,
            "omega_v": list(self.omega_v),
        }


def invariant_report(g: Graph, bound: int = EXHAUSTIVE_BOUND) -> InvariantReport:
    if g.n == 0:
        raise ValueError("empty graph has no invariant report")
    chi, _ = chromatic_number(g, bound)
    omegas = omega_per_vertex(g)
    omega = max(omegas)
    report = InvariantReport(
        chi=chi,
        omega=omega,
        alpha=independence_number(g),
        delta_max=g.max_degree(),
        delta_min=g.min_degree(),
        rho=max(g.degree(v) - omegas[v] for v in range(g.n)),
        omega_v=omegas,
    )
    assert report.omega <= report.chi <= report.delta_max + 1
    return report
