"""Solvers for choosing vertices whose removal degrades the ALCC the most."""

from clustervuln.attack_solvers.baselines import (
    baseline_betweenness,
    baseline_lcc_greedy,
    baseline_max_degree,
    baseline_random,
)
from clustervuln.attack_solvers.centrality import brandes_betweenness
from clustervuln.attack_solvers.cubic_ip import cubic_ip_monomials, emit_cubic_ip
from clustervuln.attack_solvers.exhaustive import optimal_exhaustive
from clustervuln.attack_solvers.faga import FastAdaptiveGreedy, faga, faga_delta
from clustervuln.attack_solvers.greedy import simple_greedy
from clustervuln.attack_solvers.result import AttackResult, DeltaMode
from clustervuln.attack_solvers.state import ResidualState

__all__ = [
    "AttackResult",
    "DeltaMode",
    "FastAdaptiveGreedy",
    "ResidualState",
    "baseline_betweenness",
    "baseline_lcc_greedy",
    "baseline_max_degree",
    "baseline_random",
    "brandes_betweenness",
    "cubic_ip_monomials",
    "emit_cubic_ip",
    "faga",
    "faga_delta",
    "optimal_exhaustive",
    "simple_greedy",
]
