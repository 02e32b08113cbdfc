"""Constructive strong coloring with r >= 3*Delta colors.

Starts from the edgeless padded graph where every block is bijectively
colored 1..r, inserts the real edges one at a time, and repairs each
monochromatic edge: rename the clashing color to 1, locate the unique
1-colored vertex z_i of every other block, shrink each block to the
vertices whose colors miss N(z_i), find an independent transversal of
those shrunken blocks avoiding N(x), and swap so the transversal becomes
the new color class 1.  Each repair is checked for properness and
per-block surjectivity before the next edge goes in; a repair that cannot
complete would contradict the 3*Delta bound and aborts loudly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FalsificationError, HypothesisError
from .graphs import Graph, bitmask, bits, induced_subgraph, popcount
from .transversal import VertexPartition, find_transversal_with_anchor


@dataclass
class StrongColoringResult:
    coloring: list[int]              # colors 1..r over the padded vertex set
    padded: Graph
    partition: VertexPartition       # padded partition, every block size r
    original_n: int
    repairs: int
    trace: list[dict] = field(default_factory=list)


def pad_partition(g: Graph, p: VertexPartition, r: int) -> tuple[Graph, VertexPartition]:
    """Fill every block to size exactly r with fresh isolated vertices.

    Fresh vertices are handed out round-robin over the blocks with deficits.
    """
    sizes = p.sizes()
    if any(s > r for s in sizes):
        raise HypothesisError(f"a block exceeds r={r}")
    deficits = [r - s for s in sizes]
    total = sum(deficits)
    padded = Graph(g.n + total, list(g.adj) + [0] * total)
    blocks = list(p.blocks)
    nxt = g.n
    while sum(deficits):
        for i in range(len(blocks)):
            if deficits[i]:
                blocks[i] |= 1 << nxt
                nxt += 1
                deficits[i] -= 1
    return padded, VertexPartition(padded.n, tuple(blocks))


def strong_color(g: Graph, p: VertexPartition, r: int,
                 want_trace: bool = False) -> StrongColoringResult:
    """A proper coloring of the padded graph using all r colors on each block."""
    if p.n != g.n:
        raise ValueError("partition does not match graph order")
    delta = g.max_degree()
    if r < 3 * delta:
        raise HypothesisError(f"r={r} is below 3*Delta={3 * delta}")
    if r < 1:
        raise HypothesisError("r must be positive")
    padded, pp = pad_partition(g, p, r)
    colors = [0] * padded.n
    for block in pp.blocks:
        for c, v in enumerate(bits(block), start=1):
            colors[v] = c

    rows = [0] * padded.n            # edges inserted so far
    block_of = [0] * padded.n
    for i, block in enumerate(pp.blocks):
        for v in bits(block):
            block_of[v] = i
    result = StrongColoringResult(colors, padded, pp, g.n, repairs=0)

    for x, y in sorted(g.edges()):
        rows[x] |= 1 << y
        rows[y] |= 1 << x
        if colors[x] != colors[y]:
            continue
        result.repairs += 1
        _repair(padded, pp, rows, colors, block_of, x, y, delta,
                result.trace if want_trace else None)
        _check_state(rows, pp, colors, r, context=(x, y))
    return result


def _repair(padded: Graph, pp: VertexPartition, rows: list[int],
            colors: list[int], block_of: list[int], x: int, y: int,
            delta: int, trace: list | None) -> None:
    clash = colors[x]
    if clash != 1:                   # rename so the clashing color is 1
        for v in range(padded.n):
            if colors[v] == clash:
                colors[v] = 1
            elif colors[v] == 1:
                colors[v] = clash
    anchor_block = block_of[x]
    others = [i for i in range(len(pp.blocks)) if i != anchor_block]
    zs: dict[int, int] = {}
    wmasks: dict[int, int] = {}
    for i in others:
        zcands = [v for v in bits(pp.blocks[i]) if colors[v] == 1]
        assert len(zcands) == 1, "block lost its color bijection"
        z = zcands[0]
        zs[i] = z
        neighbor_colors = {colors[u] for u in bits(rows[z])}
        w = bitmask(v for v in bits(pp.blocks[i])
                    if colors[v] not in neighbor_colors)
        if popcount(w) < 2 * delta:
            raise FalsificationError(
                "repair block shrank below 2*Delta",
                {"block": i, "size": popcount(w), "delta": delta})
        wmasks[i] = w

    union = 0
    for w in wmasks.values():
        union |= w
    sub, kept = induced_subgraph_masked(padded, rows, union)
    index = {v: i for i, v in enumerate(kept)}
    sub_blocks = []
    for i in others:
        sub_blocks.append(bitmask(index[v] for v in bits(wmasks[i])))
    sub_p = VertexPartition(sub.n, tuple(sub_blocks))
    avoid = bitmask(index[v] for v in bits(rows[x] & union))
    res = find_transversal_with_anchor(sub, sub_p, avoid)
    if res.transversal is None:
        raise FalsificationError(
            "strong-coloring repair found no transversal",
            {"edge": (x, y), "blocks": [bin(b) for b in pp.blocks],
             "colors": list(colors), "w_sizes": [popcount(w) for w in wmasks.values()]})
    if trace is not None:
        trace.append({
            "edge": [x, y],
            "z_list": [zs[i] for i in others],
            "W_sizes": [popcount(wmasks[i]) for i in others],
            "transversal": [kept[t] for t in res.transversal],
        })
    for pos, i in enumerate(others):
        w_i = kept[res.transversal[pos]]
        z_i = zs[i]
        if w_i == z_i:
            continue
        colors[z_i] = colors[w_i]
        colors[w_i] = 1


def induced_subgraph_masked(padded: Graph, rows: list[int],
                            mask: int) -> tuple[Graph, list[int]]:
    """Induced subgraph of the inserted-edge graph on ``mask``."""
    kept = list(bits(mask))
    index = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        m = 0
        for u in bits(rows[v] & mask):
            m |= 1 << index[u]
        adj.append(m)
    return Graph(len(kept), adj), kept


def _check_state(rows: list[int], pp: VertexPartition, colors: list[int],
                 r: int, context) -> None:
    for v in range(len(rows)):
        for u in bits(rows[v]):
            if colors[u] == colors[v]:
                raise FalsificationError(
                    "repair left an improper coloring",
                    {"edge": context, "clash": (u, v)})
    for block in pp.blocks:
        if {colors[v] for v in bits(block)} != set(range(1, r + 1)):
            raise FalsificationError(
                "repair broke a block's color bijection", {"edge": context})


def verify_strong_coloring(g: Graph, p: VertexPartition, r: int,
                           coloring: list[int]) -> bool:
    """Proper on the padded graph and surjective onto 1..r on each padded block."""
    padded, pp = pad_partition(g, p, r)
    if len(coloring) != padded.n:
        return False
    for u, v in padded.edges():
        if coloring[u] == coloring[v]:
            return False
    for block in pp.blocks:
        if {coloring[v] for v in bits(block)} != set(range(1, r + 1)):
            return False
    return True
