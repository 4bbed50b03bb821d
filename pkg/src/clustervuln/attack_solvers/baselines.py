"""Comparison strategies: random failure and adaptive degree/LCC/betweenness attacks."""

from __future__ import annotations

import time
from typing import Callable

import numpy as np

from clustervuln.attack_solvers.centrality import brandes_betweenness
from clustervuln.attack_solvers.result import AttackResult, argmax_smallest, check_budget
from clustervuln.attack_solvers.state import ResidualState
from clustervuln.graph_core import Graph


def run_sequence(g: Graph, k: int, pick: Callable[[ResidualState], int], method: str,
                 seed: int | None = None, setup_ms: float = 0.0,
                 state: ResidualState | None = None) -> AttackResult:
    """Remove ``k`` vertices one at a time, asking ``pick`` for each, and record curves."""
    st = state if state is not None else ResidualState(g)
    removed, elapsed = [], []
    alcc_traj, max_traj = [st.alcc()], [st.max_lcc()]
    for _ in range(k):
        t = time.perf_counter()
        u = pick(st)
        st.remove(u)
        elapsed.append((time.perf_counter() - t) * 1e3)
        removed.append(u)
        alcc_traj.append(st.alcc())
        max_traj.append(st.max_lcc())
    return AttackResult(removed, alcc_traj, max_traj, elapsed, method=method,
                        seed=seed, setup_ms=setup_ms)


def baseline_random(g: Graph, k: int, seed: int) -> AttackResult:
    check_budget(g, k)
    rng = np.random.default_rng(seed)
    order = rng.choice(g.alive_vertices(), size=k, replace=False).tolist()
    it = iter(order)
    return run_sequence(g, k, lambda st: next(it), "random", seed=seed)


def baseline_max_degree(g: Graph, k: int) -> AttackResult:
    check_budget(g, k)

    def pick(st: ResidualState) -> int:
        return argmax_smallest(np.where(st.g.alive, st.g.degree, -1))

    return run_sequence(g, k, pick, "max_degree")


def baseline_lcc_greedy(g: Graph, k: int) -> AttackResult:
    # ResidualState refreshes LCC only for the neighbours of each removed
    # vertex, which are the only ones whose LCC can change.
    check_budget(g, k)

    def pick(st: ResidualState) -> int:
        return argmax_smallest(np.where(st.g.alive, st.C, -1.0), 1e-12)

    return run_sequence(g, k, pick, "lcc_greedy")


def baseline_betweenness(g: Graph, k: int) -> AttackResult:
    check_budget(g, k)

    def pick(st: ResidualState) -> int:
        bc = brandes_betweenness(st.g)
        bc[~st.g.alive] = -1.0
        return argmax_smallest(bc, 1e-9 * max(1.0, float(bc.max())))

    return run_sequence(g, k, pick, "betweenness")
