"""Exact shortest-path betweenness for unweighted graphs (Brandes)."""

from __future__ import annotations

import numpy as np
from numba import njit

from clustervuln.graph_core import Graph


@njit(cache=True)
def _brandes(indptr, indices):
    n = len(indptr) - 1
    bc = np.zeros(n)
    sigma = np.zeros(n)
    delta = np.zeros(n)
    dist = np.full(n, -1, dtype=np.int32)
    order = np.empty(n, dtype=np.int32)
    preds = np.empty(max(len(indices), 1), dtype=np.int32)
    pstart = np.empty(n + 1, dtype=np.int32)
    for s in range(n):
        sigma[s] = 1.0
        dist[s] = 0
        order[0] = s
        head, tail, npred = 0, 1, 0
        while head < tail:
            v = order[head]
            pstart[head] = npred
            head += 1
            dv = dist[v]
            # all vertices one level up were dequeued earlier, so sigma[v] is final here
            sv = 0.0
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                dw = dist[w]
                if dw < 0:
                    dist[w] = dv + 1
                    order[tail] = w
                    tail += 1
                elif dw == dv - 1:
                    sv += sigma[w]
                    preds[npred] = w
                    npred += 1
            if v != s:
                sigma[v] = sv
        pstart[tail] = npred
        for i in range(tail - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            for j in range(pstart[i], pstart[i + 1]):
                v = preds[j]
                delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
        for i in range(tail):
            w = order[i]
            sigma[w] = 0.0
            delta[w] = 0.0
            dist[w] = -1
    return bc / 2.0


def _compact_csr(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    alive = g.alive_vertices()
    e = g.edges()
    pos = np.full(g.n_vertices, -1, dtype=np.int64)
    pos[alive] = np.arange(len(alive))
    a, b = pos[e[:, 0]], pos[e[:, 1]]
    src = np.concatenate([a, b])
    dst = np.concatenate([b, a])
    o = np.lexsort((dst, src))
    indptr = np.zeros(len(alive) + 1, dtype=np.int32)
    np.cumsum(np.bincount(src, minlength=len(alive)), out=indptr[1:])
    return alive, indptr, dst[o].astype(np.int32)


def brandes_betweenness(g: Graph) -> np.ndarray:
    """Per-vertex betweenness, each unordered pair counted once, endpoints excluded.

    Dead vertices score 0.
    """
    alive, indptr, indices = _compact_csr(g)
    out = np.zeros(g.n_vertices)
    if len(alive):
        out[alive] = _brandes(indptr, indices)
    return out
