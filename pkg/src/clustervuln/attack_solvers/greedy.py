"""Non-adaptive greedy: score every vertex once, remove the k best together."""

from __future__ import annotations

import time

import numpy as np

from clustervuln.attack_solvers.baselines import run_sequence
from clustervuln.attack_solvers.result import AttackResult, check_budget
from clustervuln.clustering_metrics import alcc_without
from clustervuln.graph_core import Graph


def simple_greedy(g: Graph, k: int) -> AttackResult:
    """Remove the ``k`` vertices with the lowest single-removal ALCC.

    Scores are computed once on the input graph. The chosen set is applied in
    ascending score order (ties: smaller id first) to report a k+1 point curve.
    """
    check_budget(g, k)
    t0 = time.perf_counter()
    alive = g.alive_vertices()
    scores = np.array([alcc_without(g, u) for u in alive.tolist()])
    # rounding absorbs summation-order noise so exact ties fall back to id order
    order = alive[np.lexsort((alive, np.round(scores, 12)))][:k].tolist()
    setup_ms = (time.perf_counter() - t0) * 1e3
    it = iter(order)
    return run_sequence(g, k, lambda st: next(it), "simple_greedy", setup_ms=setup_ms)
