"""Immutable simple graphs on vertices 0..n-1 with bitmask adjacency.

Vertex sets are plain Python ints used as bitmasks, so every set operation
is a bit operation.  Graphs are value objects: construction validates the
adjacency, after which instances are never mutated and are safe to share
across workers.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import GraphFormatError


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bitmask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """A finite simple graph: irreflexive, symmetric adjacency."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} adjacent to out-of-range vertex")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at ({v},{u})")
        self.n = n
        self.adj = adj
        self._hash = None

    # -- basic accessors ---------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1

    def size(self) -> int:
        """Number of edges."""
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def average_degree(self) -> Fraction:
        """Exact average degree 2*size/order."""
        if self.n == 0:
            raise ValueError("average degree of the empty graph is undefined")
        return Fraction(2 * self.size(), self.n)

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size()})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __setattr__(self, name, value):
        if name in ("n", "adj", "_hash") and not hasattr(self, "adj"):
            object.__setattr__(self, name, value)
        elif name == "_hash":
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("Graph instances are immutable")

    # -- derived graphs -----------------------------------------------------

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("no loops")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def without_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)


# ---------------------------------------------------------------------------
# constructors


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, adj)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` plus every edge between them."""
    amask = (1 << a.n) - 1
    bmask = ((1 << b.n) - 1) << a.n
    adj = [row | bmask for row in a.adj]
    adj += [(row << a.n) | amask for row in b.adj]
    return Graph(a.n + b.n, adj)


def blowup_cycle(cycle_len: int, clique_size: int) -> Graph:
    """Replace each vertex of a cycle by a clique, joining adjacent blow-ups.

    Vertices of blob ``i`` are ``i*clique_size .. (i+1)*clique_size - 1``.
    """
    if cycle_len < 3:
        raise ValueError("cycle_len must be at least 3")
    if clique_size < 1:
        raise ValueError("clique_size must be at least 1")
    n = cycle_len * clique_size
    edges = []
    for i in range(cycle_len):
        blob = range(i * clique_size, (i + 1) * clique_size)
        edges.extend(itertools.combinations(blob, 2))
        nxt = range(((i + 1) % cycle_len) * clique_size,
                    ((i + 1) % cycle_len + 1) * clique_size)
        edges.extend((u, v) for u in blob for v in nxt)
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# subgraphs


def induced_subgraph(g: Graph, vertices: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on the bitmask ``vertices``.

    Returns the subgraph together with the relabeling map: position ``i`` of
    the returned list is the parent-graph vertex that became vertex ``i``.
    """
    kept = list(bits(vertices))
    index = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        row = 0
        for u in bits(g.adj[v] & vertices):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(kept), adj), kept


def neighborhood_graph(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on N(v), with the relabeling map back to ``g``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, g.adj[v])


def subgraph_without_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


# ---------------------------------------------------------------------------
# connectivity


def is_connected(g: Graph, within: int | None = None) -> bool:
    mask = g.vertex_mask if within is None else within
    if mask == 0:
        return True
    start = next(bits(mask))
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    mask = g.vertex_mask if within is None else within
    comps = []
    while mask:
        start = next(bits(mask))
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & mask
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        mask &= ~seen
    return comps


def is_k_connected(g: Graph, k: int) -> bool:
    """Exhaustive vertex-cut test: no cut of size < k and order > k.

    Complete graphs K_m count as (m-1)-connected.  Desk scale only: tries
    every vertex subset of size < k as a separator.
    """
    if k <= 0:
        return True
    if g.n <= k:
        return False
    if not is_connected(g):
        return False
    verts = range(g.n)
    for cut_size in range(k):
        for cut in itertools.combinations(verts, cut_size):
            cut_mask = bitmask(cut)
            rest = g.vertex_mask & ~cut_mask
            if popcount(rest) > 1 and not is_connected(g, rest):
                return False
    return True


def connectivity(g: Graph) -> int:
    """Vertex connectivity by exhaustive cut enumeration (desk scale)."""
    if g.n <= 1:
        return 0
    k = 0
    while is_k_connected(g, k + 1):
        k += 1
    return k


# ---------------------------------------------------------------------------
# graph6 interchange (bit-exact per the standard format)


_G6_HEADER = ">>graph6<<"


def _g6_decode_order(s: str) -> tuple[int, int]:
    """Decode the length prefix, returning (n, chars consumed)."""
    if not s:
        raise GraphFormatError("empty graph6 string")
    c = ord(s[0])
    if c == 126:
        if len(s) >= 2 and ord(s[1]) == 126:
            if len(s) < 8:
                raise GraphFormatError("truncated graph6 length prefix")
            vals = [ord(ch) - 63 for ch in s[2:8]]
            if any(not 0 <= v < 64 for v in vals):
                raise GraphFormatError("length prefix character out of range")
            n = 0
            for v in vals:
                n = n << 6 | v
            return n, 8
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 length prefix")
        vals = [ord(ch) - 63 for ch in s[1:4]]
        if any(not 0 <= v < 64 for v in vals):
            raise GraphFormatError("length prefix character out of range")
        n = vals[0] << 12 | vals[1] << 6 | vals[2]
        if n < 63:
            raise GraphFormatError("non-canonical graph6 length prefix")
        return n, 4
    if not 63 <= c <= 125:
        raise GraphFormatError(f"length prefix character {s[0]!r} out of range")
    return c - 63, 1


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 string (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    n, pos = _g6_decode_order(s)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    data = s[pos:]
    if len(data) != nchars:
        raise GraphFormatError(
            f"graph6 body has {len(data)} chars, expected {nchars} for n={n}")
    stream = 0
    for ch in data:
        c = ord(ch) - 63
        if not 0 <= c < 64:
            raise GraphFormatError(f"graph6 character {ch!r} out of range")
        stream = stream << 6 | c
    pad = 6 * nchars - nbits
    if pad and stream & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits (trailing garbage)")
    stream >>= pad
    adj = [0] * n
    # upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if k >= 0 and stream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj)


def serialize_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = chr(126) + "".join(
            chr(63 + (n >> sh & 63)) for sh in (12, 6, 0))
    else:
        prefix = chr(126) * 2 + "".join(
            chr(63 + (n >> sh & 63)) for sh in (30, 24, 18, 12, 6, 0))
    stream = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            stream = stream << 1 | (g.adj[i] >> j & 1)
            nbits += 1
    pad = (6 - nbits % 6) % 6
    stream <<= pad
    nchars = (nbits + pad) // 6
    body = "".join(
        chr(63 + (stream >> 6 * (nchars - 1 - k) & 63)) for k in range(nchars))
    return prefix + body


def parse_dimacs_col(text: str) -> Graph:
    """Parse DIMACS .col: 'p edge n m' then 'e u v' lines, 1-indexed."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphFormatError(f"line {lineno}: bad problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: bad edge line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: vertex out of range")
            if u != v:
                edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    return from_edges(n, edges)


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse 'u v' pairs, one per line, 0-indexed."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertices")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex")
        top = max(top, u, v)
        if u != v:
            edges.append((u, v))
    order = (top + 1) if n is None else n
    return from_edges(order, edges)


# ---------------------------------------------------------------------------
# canonical form / isomorphism (desk scale)


def _refine_ranks(g: Graph, init: list[int] | None = None) -> list[int]:
    """Iterated neighbor-multiset refinement; equal ranks = indistinguishable."""
    if init is None:
        ranks = g.degrees()
    else:
        ranks = [(init[v], popcount(g.adj[v])) for v in range(g.n)]
        order = {sig: i for i, sig in enumerate(sorted(set(ranks)))}
        ranks = [order[s] for s in ranks]
    ncells = len(set(ranks))
    while True:
        sigs = [
            (ranks[v], tuple(sorted(ranks[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        ranks = [order[s] for s in sigs]
        if len(set(ranks)) == ncells:
            return ranks
        ncells = len(set(ranks))


def _orderings(cells: list[list[int]], chunk: int = 65536):
    """Yield chunks of vertex orderings respecting the cell order."""
    iters = itertools.product(*(itertools.permutations(c) for c in cells))
    while True:
        block = list(itertools.islice(iters, chunk))
        if not block:
            return
        yield [tuple(itertools.chain.from_iterable(p)) for p in block]


def _pack_ordering(g: Graph, perm: tuple[int, ...]) -> int:
    key = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            key = key << 1 | (g.adj[perm[i]] >> perm[j] & 1)
    return key


def _cells_by_rank(ranks: list[int]) -> list[list[int]]:
    by_rank: dict[int, list[int]] = {}
    for v, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(v)
    return [by_rank[r] for r in sorted(by_rank)]


def _min_pack(g: Graph, cells: list[list[int]]) -> int:
    """Minimum packed upper-triangle adjacency over cell-respecting orderings."""
    n = g.n
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return 0
    best = None
    nperms = 1
    for c in cells:
        for i in range(2, len(c) + 1):
            nperms *= i
    if nperms > 10_000_000:
        raise ValueError(
            f"canonical form needs {nperms} orderings; graph too symmetric "
            "for desk-scale isomorphism")
    if nbits <= 62 and nperms > 24:
        import numpy as np
        A = np.zeros((n, n), dtype=np.uint8)
        for v in range(n):
            for u in bits(g.adj[v]):
                A[v, u] = 1
        iu, ju = np.triu_indices(n, 1)
        weights = (1 << np.arange(nbits - 1, -1, -1, dtype=np.int64))
        for block in _orderings(cells):
            perms = np.array(block, dtype=np.intp)
            vals = (A[perms[:, iu], perms[:, ju]].astype(np.int64) * weights).sum(axis=1)
            m = int(vals.min())
            if best is None or m < best:
                best = m
    else:
        for block in _orderings(cells):
            for perm in block:
                key = _pack_ordering(g, perm)
                if best is None or key < best:
                    best = key
    return best


def canonical_key(g: Graph) -> tuple[int, int]:
    """An isomorphism-invariant key: (n, min packed adjacency over orderings).

    Orderings respect the iterated-refinement cells, which is a complete
    family: two graphs are isomorphic iff their keys are equal.
    """
    n = g.n
    if n <= 1:
        return (n, 0)
    cells = _cells_by_rank(_refine_ranks(g))
    return (n, _min_pack(g, cells))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.size() != b.size():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_key(a) == canonical_key(b)


def canonical_key_labeled(g: Graph, labels: list[int]) -> tuple:
    """Key invariant under label-preserving isomorphism.

    Refinement cells start from the labels, so every cell carries one label
    and the per-position label sequence is ordering-independent.
    """
    n = g.n
    if n == 0:
        return (0, (), 0)
    cells = _cells_by_rank(_refine_ranks(g, init=list(labels)))
    label_seq = tuple(labels[c[0]] for c in cells for _ in c)
    return (n, label_seq, _min_pack(g, cells))
