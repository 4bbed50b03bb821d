"""Vulnerability of the average clustering coefficient to node removal."""

from clustervuln.graph_core import (
    Graph,
    GraphDomainError,
    ParseError,
    induced_subgraph,
    parse_edge_list,
    remove_vertex,
    write_edge_list,
)
from clustervuln.clustering_metrics import (
    TriangleIndex,
    alcc,
    alcc_without,
    build_triangle_index,
    is_triangle_free,
    local_cc,
    max_lcc,
)

__all__ = [
    "Graph",
    "GraphDomainError",
    "ParseError",
    "TriangleIndex",
    "alcc",
    "alcc_without",
    "build_triangle_index",
    "induced_subgraph",
    "is_triangle_free",
    "local_cc",
    "max_lcc",
    "parse_edge_list",
    "remove_vertex",
    "write_edge_list",
]
