"""Monte-Carlo independent-cascade and linear-threshold spread."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from numba import njit

from clustervuln.graph_core import Graph, GraphDomainError

_CHUNK = 256


class Model(str, enum.Enum):
    IC = "ic"
    LT = "lt"


@dataclass(frozen=True)
class SpreadEstimate:
    mean_activations: float
    trials: int
    seed: int
    model: Model
    std_activations: float = 0.0

    @property
    def stderr(self) -> float:
        return self.std_activations / np.sqrt(self.trials)


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _ic_counts(n, eu, ev, alive, draws, edge_prob, seed_sets):
    """Active-set size per trial: union the live edges, count vertices sharing a seed's root."""
    trials = draws.shape[0]
    out = np.zeros(trials, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    mark = np.zeros(n, dtype=np.bool_)
    for t in range(trials):
        for x in range(n):
            parent[x] = x
        for e in range(len(eu)):
            if draws[t, e] < edge_prob:
                a = _find(parent, eu[e])
                b = _find(parent, ev[e])
                if a != b:
                    parent[a] = b
        for s in seed_sets[t]:
            mark[_find(parent, s)] = True
        c = 0
        for x in range(n):
            if alive[x] and mark[_find(parent, x)]:
                c += 1
        out[t] = c
        for x in range(n):
            mark[x] = False
    return out


@njit(cache=True)
def _lt_counts(indptr, indices, alive, degree, thresholds, seed_sets):
    trials = thresholds.shape[0]
    n = len(indptr) - 1
    out = np.zeros(trials, dtype=np.int64)
    active = np.zeros(n, dtype=np.bool_)
    influence = np.zeros(n)
    queue = np.empty(n, dtype=np.int64)
    for t in range(trials):
        head, tail = 0, 0
        for s in seed_sets[t]:
            if not active[s]:
                active[s] = True
                queue[tail] = s
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if not alive[w] or active[w]:
                    continue
                influence[w] += 1.0 / degree[w]
                if influence[w] >= thresholds[t, w]:
                    active[w] = True
                    queue[tail] = w
                    tail += 1
        out[t] = tail
        for x in range(n):
            active[x] = False
            influence[x] = 0.0
    return out


def _seed_matrix(g: Graph, seeds: Iterable[int] | None, trials: int,
                 rng: np.random.Generator) -> np.ndarray:
    if seeds is None:
        return rng.choice(g.alive_vertices(), size=(trials, 1))
    s = np.unique(np.asarray(list(seeds), dtype=np.int64))
    if not len(s):
        raise GraphDomainError("seed set is empty")
    for u in s.tolist():
        g.check_alive(u)
    return np.broadcast_to(s, (trials, len(s)))


def _estimate(counts: np.ndarray, trials: int, seed: int, model: Model) -> SpreadEstimate:
    return SpreadEstimate(float(counts.mean()), trials, seed, model,
                          float(counts.std(ddof=1)) if trials > 1 else 0.0)


def ic_spread(g: Graph, seeds: Iterable[int] | None, edge_prob: float, trials: int,
              seed: int) -> SpreadEstimate:
    """Independent cascade with a uniform activation probability per edge.

    Each trial samples the live-edge graph (every edge flipped once, live with
    probability ``edge_prob``); the cascade activates exactly the components
    holding a seed. ``seeds=None`` draws one uniformly random seed per trial.
    Per trial, the edge uniforms are drawn before the seed vertex, so runs that
    differ only in ``edge_prob`` share their random numbers.
    """
    if not 0.0 <= edge_prob <= 1.0:
        raise GraphDomainError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    if trials < 1:
        raise GraphDomainError("trials must be positive")
    rng = np.random.default_rng(seed)
    edges = g.edges()
    eu, ev = edges[:, 0].copy(), edges[:, 1].copy()
    counts = []
    for start in range(0, trials, _CHUNK):
        b = min(_CHUNK, trials - start)
        draws = rng.random((b, len(eu)))
        seed_sets = np.ascontiguousarray(_seed_matrix(g, seeds, b, rng))
        counts.append(_ic_counts(g.n_vertices, eu, ev, g.alive, draws, edge_prob, seed_sets))
    return _estimate(np.concatenate(counts), trials, seed, Model.IC)


def lt_spread(g: Graph, seeds: Iterable[int] | None, trials: int, seed: int) -> SpreadEstimate:
    """Linear threshold with incoming weight ``1/d(u)`` per edge into ``u``.

    Thresholds are drawn uniformly from [0, 1) per vertex and trial; ``u``
    activates once the total weight from active neighbours reaches its threshold.
    """
    if trials < 1:
        raise GraphDomainError("trials must be positive")
    rng = np.random.default_rng(seed)
    degree = np.maximum(g.degree, 1).astype(np.float64)
    counts = []
    for start in range(0, trials, _CHUNK):
        b = min(_CHUNK, trials - start)
        thresholds = rng.random((b, g.n_vertices))
        seed_sets = np.ascontiguousarray(_seed_matrix(g, seeds, b, rng))
        counts.append(_lt_counts(g.indptr, g.indices, g.alive, degree, thresholds, seed_sets))
    return _estimate(np.concatenate(counts), trials, seed, Model.LT)


def activation_bound(k_shared: int) -> float:
    """Lower bound on P(t active) when seed s and its neighbour t share ``k_shared`` neighbours (IC, p=1/2)."""
    if k_shared < 0:
        raise GraphDomainError("k_shared must be nonnegative")
    return 1.0 - 0.5 * 0.75 ** k_shared


def shared_neighbor_gadget(j: int) -> Graph:
    """Edge ``(0, 1)`` plus ``j`` common neighbours ``2..j+1``."""
    edges = [(0, 1)] + [(0, c) for c in range(2, j + 2)] + [(1, c) for c in range(2, j + 2)]
    return Graph.from_edges(j + 2, edges)


def ic_activation_probability(g: Graph, source: int, target: int, edge_prob: float,
                              trials: int, seed: int) -> tuple[float, float]:
    """Monte-Carlo P(target active | seed {source}) under IC, with its standard error."""
    g.check_alive(source)
    g.check_alive(target)
    rng = np.random.default_rng(seed)
    edges = g.edges()
    eu, ev = edges[:, 0].copy(), edges[:, 1].copy()
    hits = 0
    # count components reached from {source} that also contain target
    seed_sets = np.full((1, 1), source, dtype=np.int64)
    sub_alive = np.zeros(g.n_vertices, dtype=bool)
    sub_alive[target] = True
    for start in range(0, trials, 4096):
        b = min(4096, trials - start)
        draws = rng.random((b, len(eu)))
        got = _ic_counts(g.n_vertices, eu, ev, sub_alive, draws, edge_prob,
                         np.broadcast_to(seed_sets, (b, 1)).copy())
        hits += int(got.sum())
    p = hits / trials
    return p, float(np.sqrt(p * (1 - p) / trials))
