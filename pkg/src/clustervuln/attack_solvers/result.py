from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from clustervuln.graph_core import Graph, GraphDomainError


class DeltaMode(str, enum.Enum):
    """Scoring variant for FAGA.

    ``PAPER`` evaluates the published update formula as written; ``EXACT`` adds
    the renormalisation of non-neighbour contributions so the score equals the
    true ALCC drop.
    """

    PAPER = "paper"
    EXACT = "exact"


@dataclass
class AttackResult:
    removed: list[int]
    alcc_trajectory: list[float]
    max_lcc_trajectory: list[float]
    elapsed: list[float]          # ms per removal step
    method: str
    seed: int | None = None
    setup_ms: float = 0.0         # one-off work before the first step (index build, scoring)

    @property
    def total_ms(self) -> float:
        return self.setup_ms + sum(self.elapsed)

    @property
    def final_alcc(self) -> float:
        return self.alcc_trajectory[-1]


def check_budget(g: Graph, k: int) -> None:
    n = g.n_alive
    if not 1 <= k < n:
        raise GraphDomainError(f"k must satisfy 1 <= k < N (got k={k}, N={n})")


def argmax_smallest(scores: np.ndarray, tol: float = 0.0) -> int:
    """Index of the maximum; among values within ``tol`` of it, the smallest index."""
    best = scores.max()
    return int(np.flatnonzero(scores >= best - tol)[0])
