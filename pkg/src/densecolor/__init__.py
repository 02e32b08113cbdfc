"""Exact graph-coloring algorithms with verified theorem suites.

Bitmask graphs with exact oracles (chromatic number, cliques,
independence), an f-choosability decision procedure, independent
transversals with domination certificates, constructive strong coloring,
big-clique decompositions, the recoloring procedures built on them, and a
CLI harness that verifies the governing theorems over graph corpora.
"""

from .graphs import Graph, from_edges, parse_graph6, serialize_graph6

__version__ = "0.1.0"

__all__ = ["Graph", "from_edges", "parse_graph6", "serialize_graph6",
           "__version__"]
