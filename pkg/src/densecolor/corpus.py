"""Deterministic graph corpora: exhaustive-by-isomorphism, random, named.

Exhaustive generation extends each (n-1)-vertex representative by one new
vertex with every possible neighborhood and keeps one representative per
canonical form.  The generator self-checks against the known counts of
graph isomorphism classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import GraphFormatError
from .graphs import (
    Graph,
    blowup_cycle,
    canonical_key,
    complete,
    cycle,
    empty_graph,
    from_edges,
    is_connected,
    parse_graph6,
    path,
    petersen,
)

#: number of isomorphism classes of simple graphs on n vertices
KNOWN_CLASS_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on exactly n vertices."""
    if n == 0:
        return (empty_graph(0),)
    parents = nonisomorphic_graphs(n - 1)
    seen: dict[tuple[int, int], Graph] = {}
    for parent in parents:
        base = list(parent.adj) + [0]
        for nbhd in range(1 << (n - 1)):
            adj = list(base)
            adj[n - 1] = nbhd
            for u in range(n - 1):
                if nbhd >> u & 1:
                    adj[u] |= 1 << (n - 1)
            child = Graph(n, adj)
            key = canonical_key(child)
            if key not in seen:
                seen[key] = child
    out = tuple(seen[k] for k in sorted(seen))
    if n in KNOWN_CLASS_COUNTS and len(out) != KNOWN_CLASS_COUNTS[n]:
        raise AssertionError(
            f"canonicity self-check failed: generated {len(out)} classes "
            f"for n={n}, expected {KNOWN_CLASS_COUNTS[n]}")
    return out


def graphs_up_to(n: int) -> Iterator[Graph]:
    """All isomorphism classes with 1..n vertices, smaller orders first."""
    for k in range(1, n + 1):
        yield from nonisomorphic_graphs(k)


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


def random_corpus(n: int, count: int, seed: int, p: float | None = None) -> list[Graph]:
    """Deterministic stream of G(n, p) samples (p drawn per graph if None)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        prob = rng.uniform(0.1, 0.9) if p is None else p
        out.append(random_gnp(n, prob, rng))
    return out


def named_graph(name: str) -> Graph:
    key = name.strip().lower()
    if key == "m8":
        return blowup_cycle(5, 3)
    if key == "petersen":
        return petersen()
    for prefix, builder in (("k", complete), ("c", cycle), ("p", path), ("e", empty_graph)):
        if key.startswith(prefix) and key[1:].isdigit():
            return builder(int(key[1:]))
    raise GraphFormatError(f"unknown named graph {name!r}")


@dataclass
class CorpusSpec:
    """Where the graphs come from and which ones to keep."""

    source: str = "exhaustive"          # exhaustive | random | file | named
    max_n: int = 6                       # exhaustive: orders 1..max_n
    n: int = 8                           # random: order
    count: int = 100                     # random: how many
    seed: int = 0
    p: float | None = None
    path: str | None = None              # file: graph6 lines
    names: tuple[str, ...] = ()          # named families
    min_delta: int | None = None
    max_delta: int | None = None
    min_omega: int | None = None
    max_omega: int | None = None
    connected_only: bool = False
    extra: dict = field(default_factory=dict)

    def describe(self) -> str:
        if self.source == "exhaustive":
            return f"exhaustive n<={self.max_n}"
        if self.source == "random":
            return f"random G({self.n},p) count={self.count} seed={self.seed}"
        if self.source == "file":
            return f"file {self.path}"
        return f"named {','.join(self.names)}"


def _passes_filters(g: Graph, spec: CorpusSpec) -> bool:
    delta = g.max_degree()
    if spec.min_delta is not None and delta < spec.min_delta:
        return False
    if spec.max_delta is not None and delta > spec.max_delta:
        return False
    if spec.min_omega is not None or spec.max_omega is not None:
        from .oracles import clique_number
        omega = clique_number(g)
        if spec.min_omega is not None and omega < spec.min_omega:
            return False
        if spec.max_omega is not None and omega > spec.max_omega:
            return False
    if spec.connected_only and not is_connected(g):
        return False
    return True


def generate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """Deterministic stream of graphs described by ``spec``."""
    if spec.source == "exhaustive":
        stream: Iterator[Graph] = graphs_up_to(spec.max_n)
    elif spec.source == "random":
        stream = iter(random_corpus(spec.n, spec.count, spec.seed, spec.p))
    elif spec.source == "file":
        if spec.path is None:
            raise GraphFormatError("file corpus needs a path")
        with open(spec.path) as fh:
            graphs = []
            for line in fh:
                line = line.strip()
                if line:
                    graphs.append(parse_graph6(line))
        stream = iter(graphs)
    elif spec.source == "named":
        stream = (named_graph(name) for name in spec.names)
    else:
        raise GraphFormatError(f"unknown corpus source {spec.source!r}")
    for g in stream:
        if _passes_filters(g, spec):
            yield g
