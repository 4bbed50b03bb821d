"""Brute-force reference implementations, independent of the package code paths."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations


def adjacency(n, edges, removed=()):
    removed = set(removed)
    adj = {u: set() for u in range(n) if u not in removed}
    for u, v in edges:
        if u != v and u not in removed and v not in removed:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def triangles_by_triples(adj):
    """T(u) and tr(u,v) by checking every vertex triple."""
    t_node = {u: 0 for u in adj}
    t_edge = {}
    for u in adj:
        for v in adj[u]:
            if u < v:
                t_edge[(u, v)] = 0
    for a, b, c in combinations(sorted(adj), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            for x in (a, b, c):
                t_node[x] += 1
            for e in ((a, b), (a, c), (b, c)):
                t_edge[e] += 1
    return t_node, t_edge


def lcc_exact(adj, u):
    nb = sorted(adj[u])
    d = len(nb)
    if d < 2:
        return Fraction(0)
    links = sum(1 for a, b in combinations(nb, 2) if b in adj[a])
    return Fraction(2 * links, d * (d - 1))


def alcc_exact(adj):
    return sum((lcc_exact(adj, u) for u in adj), Fraction(0)) / len(adj)


def alcc_float(n, edges, removed=()):
    return float(alcc_exact(adjacency(n, edges, removed)))


def betweenness_by_paths(adj):
    """Enumerate every shortest path per unordered pair and count interior visits."""
    nodes = sorted(adj)
    score = {u: Fraction(0) for u in nodes}
    for s, t in combinations(nodes, 2):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        if t not in dist:
            continue
        paths = [[s]]
        for _ in range(dist[t]):
            paths = [p + [y] for p in paths for y in adj[p[-1]]
                     if dist.get(y) == dist[p[-1]] + 1 and dist[y] <= dist[t]]
        paths = [p for p in paths if p[-1] == t]
        for p in paths:
            for v in p[1:-1]:
                score[v] += Fraction(1, len(paths))
    return score


def best_residual_alcc(n, edges, k, candidates=None):
    """Minimum residual ALCC over all size-k removal sets (exact rationals)."""
    pool = sorted(range(n) if candidates is None else candidates)
    best = None
    for s in combinations(pool, k):
        val = alcc_exact(adjacency(n, edges, s))
        if best is None or val < best[0]:
            best = (val, s)
    return best


def satisfiable(n_vars, clauses):
    for bits in range(1 << n_vars):
        if all(any((bits >> (abs(l) - 1)) & 1 == (l > 0) for l in c) for c in clauses):
            return True
    return False
