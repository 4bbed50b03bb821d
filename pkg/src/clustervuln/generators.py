"""Random graph models and the 3-SAT to CSA reduction."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from clustervuln.graph_core import CapacityError, Graph, GraphDomainError

log = logging.getLogger(__name__)

REWIRE_RETRIES = 100


def _check_prob(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise GraphDomainError(f"probability must lie in [0, 1], got {p}")


def _pair_from_index(t: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Invert the row-major enumeration of pairs ``i < j`` of ``range(n)``."""
    # row i starts at i*(2n-i-1)/2; solve the quadratic, then correct float rounding
    t = t.astype(np.int64)
    b = 2 * n - 1
    i = np.floor((b - np.sqrt(b * b - 8.0 * t)) / 2).astype(np.int64)
    start = i * (2 * n - i - 1) // 2
    too_far = start > t
    i[too_far] -= 1
    start = i * (2 * n - i - 1) // 2
    nxt = (i + 1) * (2 * n - i - 2) // 2
    short = nxt <= t
    i[short] += 1
    start = i * (2 * n - i - 1) // 2
    j = t - start + i + 1
    return i, j


def gen_er(n: int, p: float, seed: int) -> Graph:
    """G(n, p): every pair is an edge independently with probability ``p``.

    Draws the edge count from Binomial(C(n,2), p) and then that many distinct
    pairs uniformly, which gives the same distribution without touching every pair.
    """
    _check_prob(p)
    if n < 1:
        raise GraphDomainError("n must be at least 1")
    rng = np.random.default_rng(seed)
    pairs = n * (n - 1) // 2
    m = int(rng.binomial(pairs, p)) if pairs else 0
    picks = np.sort(rng.choice(pairs, size=m, replace=False)) if m else np.empty(0, np.int64)
    i, j = _pair_from_index(picks, n)
    return Graph.from_edges(n, np.column_stack([i, j]))


def gen_ba(n: int, m_attach: int, seed: int) -> Graph:
    """Barabasi-Albert growth from a seed clique on ``m_attach`` vertices."""
    if not n > m_attach >= 1:
        raise GraphDomainError(f"need n > m_attach >= 1, got n={n}, m_attach={m_attach}")
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(m_attach) for j in range(i + 1, m_attach)]
    # each vertex appears once per incident edge, so uniform picks are degree-proportional
    ends: list[int] = [x for e in edges for x in e]
    for v in range(m_attach, n):
        targets: set[int] = set()
        while len(targets) < m_attach:
            if ends:
                targets.add(ends[int(rng.integers(len(ends)))])
            else:
                targets.add(int(rng.integers(v)))
        for t in sorted(targets):
            edges.append((t, v))
            ends += (t, v)
    return Graph.from_edges(n, edges)


def torus_offsets(k_hops: int) -> list[tuple[int, int]]:
    """Half of the nonzero offsets with Manhattan length <= k_hops (one per +/- pair)."""
    out = []
    for dx in range(0, k_hops + 1):
        for dy in range(-k_hops, k_hops + 1):
            if abs(dx) + abs(dy) > k_hops or (dx == 0 and dy <= 0):
                continue
            out.append((dx, dy))
    return out


def gen_ws_torus(n: int, k_hops: int, p: float, seed: int) -> Graph:
    """Two-dimensional Watts-Strogatz lattice on an ``n x n`` torus.

    Vertex ``(i, j)`` has id ``i * n + j``. The base 4-neighbour torus is closed
    under "within ``k_hops`` hops", i.e. wrapped Manhattan distance, then every
    edge is rewired with probability ``p`` to a uniformly random non-adjacent
    pair. The edge count is preserved.
    """
    _check_prob(p)
    if k_hops < 1 or n < 2 * k_hops + 1:
        raise GraphDomainError(f"need k_hops >= 1 and n >= 2*k_hops+1, got n={n}, k_hops={k_hops}")
    ii, jj = np.divmod(np.arange(n * n), n)
    lattice = []
    for dx, dy in torus_offsets(k_hops):
        other = ((ii + dx) % n) * n + (jj + dy) % n
        lattice.append(np.column_stack([ii * n + jj, other]))
    base = np.vstack(lattice)
    base = np.column_stack([base.min(axis=1), base.max(axis=1)])
    base = base[np.lexsort((base[:, 1], base[:, 0]))]
    if p == 0.0:
        return Graph.from_edges(n * n, base)

    rng = np.random.default_rng(seed)
    nn = n * n
    present = set(map(tuple, base.tolist()))
    kept = 0
    for e, flip in zip(map(tuple, base.tolist()), (rng.random(len(base)) < p).tolist()):
        if not flip:
            continue
        for _ in range(REWIRE_RETRIES):
            a, b = (int(x) for x in rng.integers(nn, size=2))
            key = (a, b) if a < b else (b, a)
            if a != b and key not in present:
                present.remove(e)
                present.add(key)
                break
        else:
            kept += 1
    if kept:
        log.warning("kept %d edges after %d failed rewiring attempts each", kept, REWIRE_RETRIES)
    edges = sorted(present)
    return Graph.from_edges(nn, edges)


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF formula; literals are nonzero ints, ``-i`` meaning "not x_i"."""

    n_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for c in self.clauses:
            if len(c) != 3:
                raise GraphDomainError(f"clause {c} does not have exactly 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise GraphDomainError(f"literal {lit} outside 1..{self.n_vars}")
            if any(-lit in c for lit in c):
                raise GraphDomainError(f"clause {c} contains a variable and its negation")

    @classmethod
    def from_clauses(cls, n_vars: int, clauses) -> CnfFormula:
        """Build a formula, padding clauses shorter than 3 by repeating their last literal."""
        padded = []
        for c in clauses:
            c = list(c)
            if not 1 <= len(c) <= 3:
                raise GraphDomainError(f"clause {c} must have 1 to 3 literals")
            padded.append(tuple(c + [c[-1]] * (3 - len(c))))
        return cls(n_vars, tuple(padded))

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Read DIMACS CNF (``p cnf <vars> <clauses>``, clauses terminated by ``0``)."""
    n_vars = n_clauses = None
    clauses, current = [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphDomainError(f"bad DIMACS header {line!r}")
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(current)
    if n_vars is None:
        raise GraphDomainError("missing 'p cnf' header")
    if n_clauses != len(clauses):
        raise GraphDomainError(f"header announces {n_clauses} clauses, found {len(clauses)}")
    return CnfFormula.from_clauses(n_vars, clauses)


def sat_brute_force(f: CnfFormula, max_vars: int = 24) -> bool:
    """Decide satisfiability by checking all 2^m assignments (bit i-1 = x_i)."""
    if f.n_vars > max_vars:
        raise CapacityError(f"{f.n_vars} variables exceeds brute-force limit {max_vars}")
    chunk = 1 << min(f.n_vars, 20)
    for start in range(0, 1 << f.n_vars, chunk):
        assign = np.arange(start, start + chunk, dtype=np.int64)
        ok = np.ones(chunk, dtype=bool)
        for clause in f.clauses:
            sat = np.zeros(chunk, dtype=bool)
            for lit in clause:
                bit = ((assign >> (abs(lit) - 1)) & 1).astype(bool)
                sat |= bit if lit > 0 else ~bit
            ok &= sat
        if ok.any():
            return True
    return False


BLUE, GREEN, RED = "blue", "green", "red"


@dataclass
class ReductionInstance:
    graph: Graph
    k: int
    vertex_roles: list[str]

    def vertices_with_role(self, role: str) -> list[int]:
        return [v for v, r in enumerate(self.vertex_roles) if r == role]


def reduce_3sat(f: CnfFormula) -> ReductionInstance:
    """Build the CSA instance whose budget ``m + 2l`` can make it triangle-free iff ``f`` is satisfiable.

    Layout: clause ``c`` position ``j`` -> blue vertex ``3c + j``; variable ``i``
    -> green ``3l + 2(i-1)`` (positive) and ``+1`` (negative); one red vertex per
    blue/green edge, appended in sorted edge order.
    """
    m, l = f.n_vars, f.n_clauses
    green0 = 3 * l

    def green(lit: int) -> int:
        return green0 + 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)

    edges: set[tuple[int, int]] = set()
    for c, clause in enumerate(f.clauses):
        b = 3 * c
        edges |= {(b, b + 1), (b, b + 2), (b + 1, b + 2)}
        for j, lit in enumerate(clause):
            edges.add((b + j, green(lit)))
    for i in range(1, m + 1):
        edges.add((green(i), green(-i)))
    core = sorted(edges)
    n_core = green0 + 2 * m
    all_edges = list(core)
    for r, (u, v) in enumerate(core):
        d = n_core + r
        all_edges += [(u, d), (v, d)]
    n = n_core + len(core)
    roles = [BLUE] * green0 + [GREEN] * (2 * m) + [RED] * len(core)
    return ReductionInstance(Graph.from_edges(n, all_edges), m + 2 * l, roles)
