"""Residual-graph bookkeeping shared by the sequential removal solvers."""

from __future__ import annotations

import numpy as np

from clustervuln.clustering_metrics import (
    TriangleIndex,
    build_triangle_index,
    lcc_from_counts,
)
from clustervuln.graph_core import Graph


class ResidualState:
    """Triangle counts, degrees and LCCs of a graph under successive removals.

    Per-edge triangle counts live on CSR slots: slot ``s`` is the directed pair
    ``(src[s], dst[s])`` and ``mirror[s]`` is the slot of the reverse pair.
    """

    def __init__(self, g: Graph, index: TriangleIndex | None = None):
        self.g = g.copy()
        n = g.n_vertices
        self.src = np.repeat(np.arange(n, dtype=np.int64), np.diff(g.indptr))
        self.dst = g.indices
        keys = self.src * n + self.dst
        self.mirror = np.searchsorted(keys, self.dst * n + self.src)

        if index is None:
            index = build_triangle_index(g)
        self.T = index.t_node.astype(np.int64).copy()
        self.tr = np.zeros(len(self.dst), dtype=np.int64)
        if index.t_edge:
            e = np.array(list(index.t_edge.keys()), dtype=np.int64)
            cnt = np.fromiter(index.t_edge.values(), dtype=np.int64, count=len(e))
            slot = np.searchsorted(keys, e[:, 0] * n + e[:, 1])
            self.tr[slot] = cnt
            self.tr[self.mirror[slot]] = cnt
        self.C = lcc_from_counts(self.T, self.g.degree)
        self.C[~self.g.alive] = 0.0

    @property
    def n_alive(self) -> int:
        return self.g.n_alive

    def alcc(self) -> float:
        return float(self.C.sum() / self.g.n_alive)

    def max_lcc(self) -> float:
        return float(self.C[self.g.alive].max())

    def remove(self, u: int) -> None:
        g = self.g
        nbrs = g.neighbors(u)
        indptr, indices = g.indptr, g.indices
        for v in nbrs.tolist():
            row = indices[indptr[v]:indptr[v + 1]]
            common = np.intersect1d(nbrs, row, assume_unique=True)
            common = common[common > v]
            if not len(common):
                continue
            # each surviving edge (v, w) inside N(u) loses the triangle {u, v, w}
            slots = indptr[v] + np.searchsorted(row, common)
            self.tr[slots] -= 1
            self.tr[self.mirror[slots]] -= 1
            self.T[v] -= len(common)
            self.T[common] -= 1
        own = np.arange(indptr[u], indptr[u + 1])
        self.tr[own] = 0
        self.tr[self.mirror[own]] = 0
        self.T[u] = 0
        g.remove(u)
        self.C[nbrs] = lcc_from_counts(self.T[nbrs], g.degree[nbrs])
        self.C[u] = 0.0

    def triangle_index(self) -> TriangleIndex:
        g = self.g
        keep = (self.src < self.dst) & g.alive[self.src] & g.alive[self.dst]
        t_edge = dict(zip(zip(self.src[keep].tolist(), self.dst[keep].tolist()),
                          self.tr[keep].tolist()))
        return TriangleIndex(self.T.copy(), t_edge)
