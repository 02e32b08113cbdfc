"""Independent transversals of vertex-partitioned graphs.

The solver either returns an independent transversal (one vertex per
block, pairwise nonadjacent) or, after removing edges until the instance
is edge-minimal without a transversal, extracts the witnessing structure:
block indices J, an induced matching M rooted at a chosen edge whose
endpoints totally dominate the union of the J-blocks, and whose
block-contraction is a tree.

Edges inside a block never affect transversal existence (a transversal
takes one vertex per block), so the solver and the certificate both live
on the graph with intra-block edges stripped.  The matching is built by
recursing into re-minimized subgraphs, so it need not be induced in the
top-level graph; the certificate therefore records its host edge set (each
level's root-incident edges), in which all five invariants hold at once.
The host is a subgraph of the input, so total domination transfers to the
input graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FalsificationError
from .graphs import Graph, bitmask, bits, popcount


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty blocks (bitmasks) covering 0..n-1."""

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        union = 0
        for b in self.blocks:
            if b == 0:
                raise ValueError("empty block")
            if b & union:
                raise ValueError("blocks overlap")
            union |= b
        if union != (1 << self.n) - 1:
            raise ValueError("blocks do not cover the vertex set")

    @classmethod
    def from_lists(cls, n: int, blocks: list[list[int]]) -> VertexPartition:
        return cls(n, tuple(bitmask(b) for b in blocks))

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if b >> v & 1:
                return i
        raise ValueError(f"vertex {v} not in any block")

    def sizes(self) -> list[int]:
        return [popcount(b) for b in self.blocks]


@dataclass(frozen=True)
class DominationCertificate:
    """Witness that a partitioned graph has no independent transversal."""

    block_indices: frozenset[int]                 # J
    matching: tuple[tuple[int, int], ...]         # M, xy included
    root_edge: tuple[int, int]                    # xy
    certified_edges: frozenset[tuple[int, int]]   # host subgraph for the invariants


@dataclass
class TransversalOutcome:
    transversal: tuple[int, ...] | None = None
    certificate: DominationCertificate | None = None

    def __post_init__(self):
        if (self.transversal is None) == (self.certificate is None):
            raise ValueError("exactly one of transversal/certificate must be set")


@dataclass
class AvoidingSearchResult:
    transversal: tuple[int, ...] | None
    hypotheses: dict = field(default_factory=dict)
    guaranteed: bool = False


# ---------------------------------------------------------------------------
# plumbing on (adjacency rows, blocks) with stable full-size vertex ids


def _strip_intra_block(g: Graph, p: VertexPartition) -> list[int]:
    rows = []
    for v in range(g.n):
        own = p.blocks[p.block_of(v)]
        rows.append(g.adj[v] & ~own)
    return rows


def _edges_of(rows: list[int], live: int) -> list[tuple[int, int]]:
    out = []
    for u in bits(live):
        for v in bits(rows[u] & live):
            if v > u:
                out.append((u, v))
    return out


def _search_transversal(rows: list[int], blocks: list[int],
                        forbidden: int = 0) -> tuple[int, ...] | None:
    """Backtracking over blocks by ascending size; vertices in index order."""
    order = sorted(range(len(blocks)), key=lambda i: (popcount(blocks[i]), i))
    chosen: list[int] = []

    def rec(pos: int, banned: int) -> bool:
        if pos == len(order):
            return True
        block = blocks[order[pos]] & ~banned
        for v in bits(block):
            chosen.append(v)
            if rec(pos + 1, banned | rows[v] | 1 << v):
                return True
            chosen.pop()
        return False

    if rec(0, forbidden):
        by_block = {order[i]: v for i, v in enumerate(chosen)}
        return tuple(by_block[i] for i in range(len(blocks)))
    return None


def transversal_exists_naive(g: Graph, p: VertexPartition) -> bool:
    """Reference oracle: enumerate every block product."""
    rows = _strip_intra_block(g, p)
    lists = [list(bits(b)) for b in p.blocks]
    for combo in itertools.product(*lists):
        ok = True
        for i in range(len(combo)):
            for j in range(i + 1, len(combo)):
                if rows[combo[i]] >> combo[j] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def verify_transversal(g: Graph, p: VertexPartition, t: tuple[int, ...]) -> bool:
    if len(t) != len(p.blocks):
        return False
    for i, v in enumerate(t):
        if not p.blocks[i] >> v & 1:
            return False
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if g.has_edge(t[i], t[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# certificate extraction


def _minimize_edges(rows: list[int], blocks: list[int]) -> list[int]:
    """Remove edges in lexicographic order while no transversal exists."""
    live = 0
    for b in blocks:
        live |= b
    rows = list(rows)
    for u, v in _edges_of(rows, live):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        if _search_transversal(rows, blocks) is not None:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return rows


def _extract_certificate(
    rows: list[int],
    blocks: list[int],
    ids: list[frozenset[int]],
    xy: tuple[int, int],
) -> tuple[frozenset[int], list[tuple[int, int]], set[tuple[int, int]]]:
    """The inductive construction on an edge-minimal no-transversal instance.

    Returns (J as original block ids, matching, host edges).  The host
    collects each level's root-incident edges plus the deeper host: the
    matching is induced there, total domination holds there, and the host
    is a subgraph of the input, so domination transfers upward.
    """
    x, y = xy
    a = next(i for i, b in enumerate(blocks) if b >> x & 1)
    b = next(i for i, blk in enumerate(blocks) if blk >> y & 1)
    assert a != b, "root edge must join two blocks"
    host = {(min(x, u), max(x, u)) for u in bits(rows[x])}
    host |= {(min(y, u), max(y, u)) for u in bits(rows[y])}
    removed = rows[x] | rows[y] | 1 << x | 1 << y
    keep_blocks = []
    keep_ids = []
    for i, blk in enumerate(blocks):
        if i in (a, b):
            continue
        rest = blk & ~removed
        assert rest, "non-root block emptied; edge-minimality violated"
        keep_blocks.append(rest)
        keep_ids.append(ids[i])
    zclass = (blocks[a] | blocks[b]) & ~removed
    if zclass == 0:
        return ids[a] | ids[b], [xy], host
    live = zclass
    for blk in keep_blocks:
        live |= blk
    sub_rows = [rows[v] & live if live >> v & 1 else 0 for v in range(len(rows))]
    # merged class stays independent: cross edges between the two root
    # blocks are dropped along with everything incident to N({x,y})
    for u in bits(zclass):
        sub_rows[u] &= ~zclass
    merged_blocks = keep_blocks + [zclass]
    merged_ids = keep_ids + [ids[a] | ids[b]]
    assert _search_transversal(sub_rows, merged_blocks) is None, \
        "derived instance unexpectedly has a transversal"
    sub_rows = _minimize_edges(sub_rows, merged_blocks)
    zw = None
    for u in bits(zclass):
        nb = sub_rows[u]
        if nb:
            w = next(bits(nb))
            cand = (min(u, w), max(u, w))
            if zw is None or cand < zw:
                zw = cand
    assert zw is not None, "merged class has an isolated vertex after minimization"
    j_rec, m_rec, host_rec = _extract_certificate(sub_rows, merged_blocks, merged_ids, zw)
    merged_id = ids[a] | ids[b]
    assert merged_id <= j_rec, "recursion lost the merged class"
    return j_rec | ids[a] | ids[b], m_rec + [xy], host | host_rec


def find_independent_transversal(g: Graph, p: VertexPartition) -> TransversalOutcome:
    """An independent transversal, or the domination certificate if none exists."""
    if p.n != g.n:
        raise ValueError("partition does not match graph order")
    rows = _strip_intra_block(g, p)
    blocks = list(p.blocks)
    t = _search_transversal(rows, blocks)
    if t is not None:
        return TransversalOutcome(transversal=t)
    minimized = _minimize_edges(rows, blocks)
    live = g.vertex_mask
    edges = _edges_of(minimized, live)
    assert edges, "no-transversal instance minimized to an edgeless graph"
    root = min(edges)
    ids = [frozenset([i]) for i in range(len(blocks))]
    j, matching, host = _extract_certificate(minimized, blocks, ids, root)
    cert = DominationCertificate(
        block_indices=frozenset(j),
        matching=tuple(sorted(tuple(sorted(e)) for e in matching)),
        root_edge=root,
        certified_edges=frozenset(host),
    )
    if not verify_certificate(g, p, cert):
        raise FalsificationError(
            "extracted certificate failed verification",
            {"blocks": [bin(b) for b in p.blocks], "edges": sorted(edges)})
    return TransversalOutcome(certificate=cert)


def verify_certificate(g: Graph, p: VertexPartition,
                       cert: DominationCertificate) -> bool:
    """Check all certificate invariants on the recorded host subgraph."""
    rows = _strip_intra_block(g, p)
    edge_set = cert.certified_edges
    for u, v in edge_set:
        if not rows[u] >> v & 1:
            return False                     # not a subgraph of the stripped input
    if cert.root_edge not in cert.matching:
        return False
    j = cert.block_indices
    union_j = 0
    for i in j:
        union_j |= p.blocks[i]
    mvertices = 0
    qrows = [0] * g.n
    for u, v in edge_set:
        qrows[u] |= 1 << v
        qrows[v] |= 1 << u
    for u, v in cert.matching:
        if not (union_j >> u & 1 and union_j >> v & 1):
            return False
        if mvertices >> u & 1 or mvertices >> v & 1:
            return False                     # shared endpoint
        mvertices |= 1 << u | 1 << v
    if len(cert.matching) != len(j) - 1:
        return False
    # induced: edges of the certified graph among matching vertices are
    # exactly the matching edges
    induced = set()
    for u in bits(mvertices):
        for v in bits(qrows[u] & mvertices):
            if v > u:
                induced.add((u, v))
    if induced != set(cert.matching):
        return False
    # total domination of the J-blocks in the certified graph
    dominated = 0
    for u in bits(mvertices):
        dominated |= qrows[u]
    if union_j & ~dominated:
        return False
    # block contraction is a simple tree on J
    contracted = set()
    for u, v in cert.matching:
        pair = frozenset((p.block_of(u), p.block_of(v)))
        if len(pair) != 2 or pair in contracted:
            return False
        contracted.add(pair)
    nodes = set(j)
    parent = {i: i for i in nodes}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for pair in contracted:
        u, v = tuple(pair)
        ru, rv = find(u), find(v)
        if ru == rv:
            return False                     # cycle
        parent[ru] = rv
    roots = {find(i) for i in nodes}
    return len(roots) == 1


# ---------------------------------------------------------------------------
# avoidance variants


def _lopsided_hypotheses(g: Graph, p: VertexPartition, s_mask: int,
                         t: int | Fraction) -> dict:
    tq = Fraction(t)
    degree_ok = True
    for i, blk in enumerate(p.blocks):
        size = popcount(blk)
        for v in bits(blk):
            if g.degree(v) > min(tq, size - tq):
                degree_ok = False
                break
        if not degree_ok:
            break
    sizes = sorted(p.sizes())
    s_size = popcount(s_mask)
    s_below_min = s_size < sizes[0]
    smallest = min(range(len(p.blocks)),
                   key=lambda i: (popcount(p.blocks[i]), i))
    s_weakened = (len(sizes) >= 2 and s_size < sizes[1]
                  and bool(p.blocks[smallest] & ~s_mask))
    return {
        "degree_ok": degree_ok,
        "s_below_min_block": s_below_min,
        "s_weakened_ok": s_weakened,
        "t": tq,
    }


def find_transversal_avoiding(
    g: Graph, p: VertexPartition, avoid: int, t: int | Fraction
) -> AvoidingSearchResult:
    """Independent transversal disjoint from ``avoid`` (vertex bitmask).

    When the degree condition d(v) <= min(t, |V_i| - t) holds for every
    vertex and |S| is below the smallest block (or the weakened variant:
    below the second-smallest block while missing some of the smallest),
    existence is guaranteed; a failed search then aborts loudly.  With
    hypotheses unmet the search still runs and the result is flagged.
    """
    if p.n != g.n:
        raise ValueError("partition does not match graph order")
    hyp = _lopsided_hypotheses(g, p, avoid, t)
    guaranteed = hyp["degree_ok"] and (hyp["s_below_min_block"] or hyp["s_weakened_ok"])
    rows = _strip_intra_block(g, p)
    found = _search_transversal(rows, list(p.blocks), forbidden=avoid)
    if guaranteed and found is None:
        raise FalsificationError(
            "avoiding transversal guaranteed by hypotheses but not found",
            {"blocks": [bin(b) for b in p.blocks], "avoid": bin(avoid),
             "t": str(hyp["t"])})
    return AvoidingSearchResult(found, hyp, guaranteed)


def find_transversal_with_anchor(
    h: Graph, p: VertexPartition, x_neighbors: int
) -> AvoidingSearchResult:
    """Transversal avoiding the anchor's neighborhood.

    The implicit anchor vertex is adjacent to ``x_neighbors``; with every
    block of size >= 2*Delta(h) and fewer than 2*Delta(h) anchor edges,
    the transversal exists and extends to an independent set with the
    anchor.
    """
    if p.n != h.n:
        raise ValueError("partition does not match graph order")
    delta = h.max_degree()
    hyp = {
        "blocks_big_enough": all(popcount(b) >= 2 * delta for b in p.blocks),
        "anchor_degree_ok": popcount(x_neighbors) < 2 * delta,
        "delta": delta,
    }
    guaranteed = delta >= 1 and hyp["blocks_big_enough"] and hyp["anchor_degree_ok"]
    rows = _strip_intra_block(h, p)
    found = _search_transversal(rows, list(p.blocks), forbidden=x_neighbors)
    if guaranteed and found is None:
        raise FalsificationError(
            "anchored transversal guaranteed by hypotheses but not found",
            {"blocks": [bin(b) for b in p.blocks],
             "x_neighbors": bin(x_neighbors), "delta": delta})
    return AvoidingSearchResult(found, hyp, guaranteed)
