"""Local/average clustering coefficients and triangle indexing."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from clustervuln.graph_core import Graph, GraphDomainError


@dataclass
class TriangleIndex:
    """Triangle counts per vertex (``t_node``) and per alive edge (``t_edge``).

    ``t_edge`` is keyed by ``(u, v)`` with ``u < v`` and holds every alive edge,
    including those in no triangle.
    """

    t_node: np.ndarray
    t_edge: dict[tuple[int, int], int] = field(default_factory=dict)

    def tr(self, u: int, v: int) -> int:
        return self.t_edge[(u, v) if u < v else (v, u)]

    @property
    def n_triangles(self) -> int:
        return int(self.t_node.sum()) // 3

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriangleIndex):
            return NotImplemented
        return np.array_equal(self.t_node, other.t_node) and self.t_edge == other.t_edge


def build_triangle_index(g: Graph) -> TriangleIndex:
    """Forward triangle listing over a degree ordering.

    Vertices are ranked by ``(degree, id)``; each triangle is found exactly once,
    at its middle-ranked vertex, as an intersection of higher-ranked neighbour sets.
    Runs in O(M^{3/2}).
    """
    n = g.n_vertices
    t_node = np.zeros(n, dtype=np.int64)
    t_edge = {(u, v): 0 for u, v in g.edges().tolist()}
    alive = g.alive_vertices()
    order = alive[np.lexsort((alive, g.degree[alive]))]
    rank = np.full(n, -1, dtype=np.int64)
    rank[order] = np.arange(len(order))
    rank_l = rank.tolist()
    higher: list[set[int]] = [set() for _ in range(n)]
    for u in order[::-1].tolist():
        ru = rank_l[u]
        hu = higher[u]
        for v in g.neighbors(u).tolist():
            if rank_l[v] >= ru:
                continue
            hv = higher[v]
            for w in hu & hv:
                t_node[u] += 1
                t_node[v] += 1
                t_node[w] += 1
                t_edge[(u, v) if u < v else (v, u)] += 1
                t_edge[(u, w) if u < w else (w, u)] += 1
                t_edge[(v, w) if v < w else (w, v)] += 1
            hv.add(u)
    return TriangleIndex(t_node, t_edge)


def _alive_adjacency(g: Graph) -> sp.csr_matrix:
    data = np.ones(len(g.indices), dtype=np.float64)
    a = sp.csr_matrix((data, g.indices, g.indptr), shape=(g.n_vertices, g.n_vertices))
    mask = sp.diags(g.alive.astype(np.float64))
    return (mask @ a @ mask).tocsr()


def node_triangles(g: Graph) -> np.ndarray:
    """T(u) for every vertex via ``diag(A^3) / 2`` on the alive adjacency."""
    a = _alive_adjacency(g)
    t2 = np.asarray((a @ a).multiply(a).sum(axis=1)).ravel()
    return np.rint(t2 / 2).astype(np.int64)


def lcc_from_counts(t_node: np.ndarray, degree: np.ndarray) -> np.ndarray:
    d = degree.astype(np.float64)
    denom = np.where(degree > 1, d * (d - 1), 1.0)
    return np.where(degree > 1, 2.0 * t_node / denom, 0.0)


def local_cc_all(g: Graph) -> np.ndarray:
    """Per-vertex LCC; dead vertices get 0."""
    c = lcc_from_counts(node_triangles(g), g.degree)
    c[~g.alive] = 0.0
    return c


def local_cc(g: Graph, u: int) -> float:
    g.check_alive(u)
    nbrs = g.neighbors(u)
    d = len(nbrs)
    if d <= 1:
        return 0.0
    nbr_set = set(nbrs.tolist())
    links = sum(len(nbr_set.intersection(g.neighbors(v).tolist())) for v in nbrs.tolist())
    # each neighbour-neighbour edge is seen from both ends
    return links / (d * (d - 1))


def _require_nonempty(g: Graph) -> int:
    n = g.n_alive
    if n == 0:
        raise GraphDomainError("clustering coefficient undefined on a graph with no vertices")
    return n


def alcc(g: Graph) -> float:
    """Average local clustering coefficient over all alive vertices.

    Vertices of degree 0 or 1 contribute 0 but still count in the denominator.
    """
    n = _require_nonempty(g)
    return float(local_cc_all(g).sum() / n)


def max_lcc(g: Graph) -> float:
    _require_nonempty(g)
    return float(local_cc_all(g)[g.alive].max())


def is_triangle_free(g: Graph) -> bool:
    return build_triangle_index(g).n_triangles == 0


def alcc_without(g: Graph, u: int) -> float:
    """ALCC of ``G[V \\ {u}]`` by full recomputation."""
    g.check_alive(u)
    if g.n_alive < 2:
        raise GraphDomainError("removing the only vertex leaves an empty graph")
    h = g.copy()
    h.remove(u)
    return alcc(h)


def list_triangles(g: Graph) -> np.ndarray:
    """All triangles of the alive graph as a ``(t, 3)`` array of ascending ids."""
    adj = g.adjacency_sets()
    out = []
    for u, v in g.edges().tolist():
        for w in adj[u] & adj[v]:
            if w > v:
                out.append((u, v, w))
    return np.asarray(out, dtype=np.int64).reshape(-1, 3)
