"""Undirected simple graphs in CSR form with logical vertex removal.

Vertex ids are dense integers ``0..n_vertices-1``. Removing a vertex only
clears its liveness flag, so ids stay meaningful across an attack.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

log = logging.getLogger(__name__)


class GraphDomainError(ValueError):
    """Operation applied to a vertex or graph outside its domain."""


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CapacityError(RuntimeError):
    """Requested computation exceeds a configured size budget."""


@dataclass(frozen=True)
class IngestStats:
    duplicate_edges: int = 0
    self_loops: int = 0


class Graph:
    """Undirected simple graph with a per-vertex liveness mask.

    The CSR arrays (``indptr``, ``indices``) describe the original graph and
    are never mutated; ``remove``/``restore`` only touch ``alive`` and the
    cached alive degrees.
    """

    def __init__(self, n_vertices: int, indptr: np.ndarray, indices: np.ndarray,
                 alive: np.ndarray | None = None, ingest: IngestStats | None = None):
        self.n_vertices = int(n_vertices)
        self.indptr = indptr
        self.indices = indices
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False
        if alive is None:
            self.alive = np.ones(self.n_vertices, dtype=bool)
            self.degree = np.diff(indptr).astype(np.int64)
        else:
            self.alive = alive.copy()
            row = np.repeat(np.arange(self.n_vertices), np.diff(indptr))
            live = self.alive[row] & self.alive[indices]
            self.degree = np.bincount(row[live], minlength=self.n_vertices).astype(np.int64)
        self.ingest = ingest or IngestStats()

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, dropping self-loops and collapsing duplicates."""
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                         dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= n_vertices):
            raise GraphDomainError(f"edge endpoint outside 0..{n_vertices - 1}")
        loops = arr[:, 0] == arr[:, 1]
        arr = arr[~loops]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.unique(lo * n_vertices + hi) if len(lo) else np.empty(0, dtype=np.int64)
        stats = IngestStats(duplicate_edges=len(lo) - len(keys), self_loops=int(loops.sum()))
        u, v = keys // max(n_vertices, 1), keys % max(n_vertices, 1)
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n_vertices + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n_vertices), out=indptr[1:])
        return cls(n_vertices, indptr, dst.astype(np.int64), ingest=stats)

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g.n_vertices = self.n_vertices
        g.indptr = self.indptr
        g.indices = self.indices
        g.alive = self.alive.copy()
        g.degree = self.degree.copy()
        g.ingest = self.ingest
        return g

    @property
    def n_alive(self) -> int:
        return int(self.alive.sum())

    @property
    def n_edges(self) -> int:
        return int(self.degree[self.alive].sum()) // 2

    def is_alive(self, u: int) -> bool:
        return 0 <= u < self.n_vertices and bool(self.alive[u])

    def check_alive(self, u: int) -> None:
        if not 0 <= u < self.n_vertices:
            raise GraphDomainError(f"vertex {u} out of range 0..{self.n_vertices - 1}")
        if not self.alive[u]:
            raise GraphDomainError(f"vertex {u} has been removed")

    def alive_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.alive)

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted alive neighbours of ``u``."""
        row = self.indices[self.indptr[u]:self.indptr[u + 1]]
        return row[self.alive[row]]

    def has_edge(self, u: int, v: int) -> bool:
        if not (self.is_alive(u) and self.is_alive(v)):
            return False
        row = self.indices[self.indptr[u]:self.indptr[u + 1]]
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    def edges(self) -> np.ndarray:
        """Alive edges as an ``(M, 2)`` array with ``u < v``, lexicographically sorted."""
        row = np.repeat(np.arange(self.n_vertices), np.diff(self.indptr))
        keep = (row < self.indices) & self.alive[row] & self.alive[self.indices]
        return np.column_stack([row[keep], self.indices[keep]])

    def adjacency_sets(self) -> list[set[int]]:
        return [set(self.neighbors(u).tolist()) if self.alive[u] else set()
                for u in range(self.n_vertices)]

    def remove(self, u: int) -> None:
        """Mark ``u`` dead in place."""
        self.check_alive(u)
        nbrs = self.neighbors(u)
        self.degree[nbrs] -= 1
        self.degree[u] = 0
        self.alive[u] = False

    def restore(self, u: int) -> None:
        """Undo ``remove(u)``."""
        if not 0 <= u < self.n_vertices:
            raise GraphDomainError(f"vertex {u} out of range 0..{self.n_vertices - 1}")
        if self.alive[u]:
            raise GraphDomainError(f"vertex {u} is alive")
        self.alive[u] = True
        nbrs = self.neighbors(u)
        self.degree[nbrs] += 1
        self.degree[u] = len(nbrs)

    def same_as(self, other: Graph) -> bool:
        """Equality of vertex count, liveness and alive edge sets."""
        return (self.n_vertices == other.n_vertices
                and np.array_equal(self.alive, other.alive)
                and np.array_equal(self.edges(), other.edges()))

    def __repr__(self) -> str:
        return f"Graph(N={self.n_alive}/{self.n_vertices}, M={self.n_edges})"


def parse_edge_list(text: bytes | str) -> Graph:
    """Parse a SNAP-style edge list: ``u v`` per line, ``#`` starts a comment line."""
    if isinstance(text, bytes):
        text = text.decode()
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) < 2:
            raise ParseError(lineno, f"expected two vertex ids, got {stripped!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"malformed vertex id in {stripped!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "negative vertex id")
        pairs.append((u, v))
    n = max((max(p) for p in pairs), default=-1) + 1
    g = Graph.from_edges(n, pairs)
    if g.ingest.self_loops or g.ingest.duplicate_edges:
        log.info("dropped %d self-loops and %d duplicate edges",
                 g.ingest.self_loops, g.ingest.duplicate_edges)
    return g


def write_edge_list(g: Graph) -> bytes:
    return "".join(f"{u} {v}\n" for u, v in g.edges().tolist()).encode()


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Logical subgraph induced by ``s``: vertices outside ``s`` are marked dead."""
    s = np.unique(np.asarray(list(s), dtype=np.int64))
    for u in s.tolist():
        g.check_alive(u)
    mask = np.zeros(g.n_vertices, dtype=bool)
    mask[s] = True
    return Graph(g.n_vertices, g.indptr, g.indices, alive=mask, ingest=g.ingest)


def remove_vertex(g: Graph, u: int) -> Graph:
    """Copy of ``g`` with ``u`` removed; ``g`` itself is unchanged."""
    h = g.copy()
    h.remove(u)
    return h
