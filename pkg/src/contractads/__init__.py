"""Exact invariants of graphical configuration spaces and their contractads."""

from .graphs import (
    CapExceeded,
    Graph,
    canonical_edges,
    complete_graph,
    cycle_graph,
    family,
    graph_from_json,
    graph_to_json,
    multipartite_graph,
    parse_graph,
    path_graph,
    star_graph,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "canonical_edges",
    "complete_graph",
    "cycle_graph",
    "family",
    "graph_from_json",
    "graph_to_json",
    "multipartite_graph",
    "parse_graph",
    "path_graph",
    "star_graph",
]
