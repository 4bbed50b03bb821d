"""Exact CSA by enumerating every size-k removal set."""

from __future__ import annotations

import time
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

import numpy as np

from clustervuln.attack_solvers.baselines import run_sequence
from clustervuln.attack_solvers.result import AttackResult, check_budget
from clustervuln.clustering_metrics import list_triangles
from clustervuln.graph_core import CapacityError, Graph, GraphDomainError

DEFAULT_BUDGET = 10**8
_BLOCK_CELLS = 1 << 22
_TIE_TOL = 1e-12


@lru_cache(maxsize=256)
def _lex_combinations(m: int, r: int) -> np.ndarray:
    """All r-subsets of ``range(m)`` as rows, in lexicographic order."""
    if r == 0:
        return np.zeros((1, 0), dtype=np.int16)
    parts = []
    for i in range(m - r + 1):
        tail = _lex_combinations(m - i - 1, r - 1) + np.int16(i + 1)
        head = np.full((len(tail), 1), i, dtype=np.int16)
        parts.append(np.hstack([head, tail]))
    out = np.vstack(parts)
    out.flags.writeable = False
    return out


def lex_combination_blocks(m: int, r: int, max_rows: int) -> Iterator[np.ndarray]:
    """Yield r-subsets of ``range(m)`` in lexicographic order, in blocks of <= max_rows."""

    def rec(prefix: list[int], start: int, left: int) -> Iterator[np.ndarray]:
        total = comb(m - start, left)
        if total <= max_rows or left == 0:
            block = _lex_combinations(m - start, left) + np.int16(start)
            pre = np.broadcast_to(np.asarray(prefix, dtype=np.int16), (len(block), len(prefix)))
            yield np.hstack([pre, block])
            return
        for i in range(start, m - left + 1):
            yield from rec(prefix + [i], i + 1, left - 1)

    yield from rec([], 0, r)


def optimal_exhaustive(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                       candidates: Iterable[int] | None = None) -> AttackResult:
    """Size-k set minimising the residual ALCC (ties: lexicographically smallest set).

    ``candidates`` restricts which vertices may be removed. Every subset is
    scored in vectorised blocks: only vertices lying on a triangle can have
    nonzero LCC, so degrees and surviving triangle counts are tracked for those
    alone. Enumeration stops early once a triangle-free residual is found.
    """
    check_budget(g, k)
    t0 = time.perf_counter()
    n_alive = g.n_alive
    cand = (g.alive_vertices() if candidates is None
            else np.unique(np.asarray(list(candidates), dtype=np.int64)))
    for u in cand.tolist():
        g.check_alive(u)
    if len(cand) < k:
        raise GraphDomainError(f"only {len(cand)} candidates for k={k}")
    n_sets = comb(len(cand), k)
    if n_sets > budget:
        raise CapacityError(f"C({len(cand)},{k}) = {n_sets} subsets exceeds budget {budget}")

    tri = list_triangles(g)
    tri_vertices = np.unique(tri)
    nc, nt, ntri = len(cand), len(tri_vertices), len(tri)
    best_val, best_row = np.inf, None
    if ntri == 0:
        best_val, best_row = 0.0, np.arange(k)
    else:
        pos_t = {u: i for i, u in enumerate(tri_vertices.tolist())}
        pos_c = {u: i for i, u in enumerate(cand.tolist())}
        # candidate -> triangle-vertex adjacency, for residual degrees
        cand_adj = np.zeros((nc, nt), dtype=np.float32)
        for u in tri_vertices.tolist():
            for v in g.neighbors(u).tolist():
                if v in pos_c:
                    cand_adj[pos_c[v], pos_t[u]] = 1.0
        tri_cand = np.zeros((nc, ntri), dtype=np.float32)
        tri_inc = np.zeros((ntri, nt), dtype=np.float32)
        for j, t in enumerate(tri.tolist()):
            for u in t:
                tri_inc[j, pos_t[u]] = 1.0
                if u in pos_c:
                    tri_cand[pos_c[u], j] = 1.0
        d0 = g.degree[tri_vertices].astype(np.float64)
        max_rows = max(1, _BLOCK_CELLS // max(nc, nt, ntri))
        for block in lex_combination_blocks(nc, k, max_rows):
            rows = len(block)
            removed = np.zeros((rows, nc), dtype=np.float32)
            removed[np.arange(rows)[:, None], block] = 1.0
            deg = d0 - (removed @ cand_adj)
            intact = ((removed @ tri_cand) == 0).astype(np.float32)
            t_res = (intact @ tri_inc).astype(np.float64)
            # removed vertices lose all their triangles, so their term is already 0
            denom = np.where(deg > 1, deg * (deg - 1), 1.0)
            vals = np.where(deg > 1, 2.0 * t_res / denom, 0.0).sum(axis=1) / (n_alive - k)
            i = int(np.flatnonzero(vals <= vals.min() + _TIE_TOL)[0])
            if vals[i] < best_val - _TIE_TOL:
                best_val, best_row = float(vals[i]), block[i]
            if best_val <= _TIE_TOL:
                break
    chosen = cand[np.asarray(best_row, dtype=np.int64)].tolist()
    setup_ms = (time.perf_counter() - t0) * 1e3
    it = iter(chosen)
    return run_sequence(g, k, lambda st: next(it), "optimal", setup_ms=setup_ms)
