from fractions import Fraction
from math import comb

import numpy as np
import pytest
from scipy import stats

from clustervuln.attack_solvers import (
    DeltaMode,
    FastAdaptiveGreedy,
    baseline_betweenness,
    baseline_lcc_greedy,
    baseline_max_degree,
    baseline_random,
    brandes_betweenness,
    cubic_ip_monomials,
    emit_cubic_ip,
    faga,
    faga_delta,
    optimal_exhaustive,
    simple_greedy,
)
from clustervuln.attack_solvers.exhaustive import lex_combination_blocks
from clustervuln.clustering_metrics import (
    TriangleIndex,
    alcc,
    alcc_without,
    build_triangle_index,
    local_cc_all,
)
from clustervuln.graph_core import CapacityError, Graph, GraphDomainError
from clustervuln.generators import gen_er
from graphs import BOWTIE, C4, K4, PAW, PETERSEN, graph, random_edges
from oracles import adjacency, alcc_float, best_residual_alcc, betweenness_by_paths

K3 = [(0, 1), (1, 2), (0, 2)]
TWO_K3 = K3 + [(3, 4), (4, 5), (3, 5)]
BARBELL = K3 + [(3, 4), (4, 5), (3, 5), (2, 3)]
STAR4 = [(0, i) for i in range(1, 5)]
PATH3 = [(0, 1), (1, 2)]

ALL_SOLVERS = {
    "faga": lambda g, k: faga(g, k),
    "faga_paper": lambda g, k: faga(g, k, DeltaMode.PAPER),
    "simple_greedy": simple_greedy,
    "random": lambda g, k: baseline_random(g, k, seed=3),
    "max_degree": baseline_max_degree,
    "lcc_greedy": baseline_lcc_greedy,
    "betweenness": baseline_betweenness,
    "optimal": optimal_exhaustive,
}


def corpus(count, max_n, seed0):
    rng = np.random.default_rng(seed0)
    for s in range(count):
        n = int(rng.integers(4, max_n + 1))
        p = float(rng.uniform(0.1, 0.8))
        yield graph(random_edges(n, p, 7919 * seed0 + s), n=n)


def check_result(g, res, k):
    assert len(res.removed) == k == len(set(res.removed))
    assert len(res.alcc_trajectory) == len(res.max_lcc_trajectory) == k + 1
    assert len(res.elapsed) == k
    h = g.copy()
    assert res.alcc_trajectory[0] == pytest.approx(alcc(h), abs=1e-12)
    for i, u in enumerate(res.removed):
        assert h.is_alive(u)
        h.remove(u)
        assert res.alcc_trajectory[i + 1] == pytest.approx(alcc(h), abs=1e-9)
        assert res.max_lcc_trajectory[i + 1] == pytest.approx(local_cc_all(h).max(), abs=1e-9)


# ---- faga_delta ---------------------------------------------------------

def test_faga_delta_paw(paw):
    idx = build_triangle_index(paw)
    for mode in DeltaMode:
        assert faga_delta(paw, idx, 0, mode) == pytest.approx(7 / 12, abs=1e-12)
    assert faga_delta(paw, idx, 0) == pytest.approx(alcc(paw) - alcc_without(paw, 0), abs=1e-12)


def test_faga_delta_isolated_vertex():
    g = graph(K3 + [(3, 4), (4, 5)], n=7)
    idx = build_triangle_index(g)
    c = local_cc_all(g)
    n = g.n_alive
    want = -(c.sum() - c[6]) / (n * (n - 1))
    assert faga_delta(g, idx, 6) == pytest.approx(want, abs=1e-12)
    assert faga_delta(g, idx, 6) <= 0
    assert faga_delta(g, idx, 6, DeltaMode.PAPER) == 0.0


def test_faga_delta_rejects_stale_index(paw):
    stale = build_triangle_index(graph(K4))
    with pytest.raises(GraphDomainError):
        faga_delta(paw, stale, 0)
    bad = build_triangle_index(paw)
    bad = TriangleIndex(bad.t_node + 1, bad.t_edge)
    with pytest.raises(GraphDomainError):
        faga_delta(paw, bad, 0)


def test_faga_delta_needs_two_vertices():
    g = graph([(0, 1)])
    g.remove(1)
    with pytest.raises(GraphDomainError):
        faga_delta(g, build_triangle_index(g), 0)


def test_exact_delta_matches_oracle_every_step():
    for g in corpus(200, 40, seed0=11):
        k = min(5, g.n_vertices - 2)
        engine = FastAdaptiveGreedy(g)
        for _ in range(k):
            h = engine.state.g
            idx = build_triangle_index(h)
            base = alcc(h)
            vec = engine.scores()
            for u in h.alive_vertices().tolist():
                want = base - alcc_without(h, u)
                assert faga_delta(h, idx, u) == pytest.approx(want, abs=1e-9)
                assert vec[u] == pytest.approx(want, abs=1e-9)
            engine.step()


def test_correction_identity():
    for g in corpus(60, 30, seed0=12):
        idx = build_triangle_index(g)
        c = local_cc_all(g)
        n = g.n_alive
        for u in range(g.n_vertices):
            nb = g.neighbors(u)
            corr = (c.sum() - c[u] - c[nb].sum()) / (n * (n - 1))
            diff = faga_delta(g, idx, u, DeltaMode.PAPER) - faga_delta(g, idx, u)
            assert diff == pytest.approx(corr, abs=1e-9)


def test_vectorised_formula_scores_match_scalar():
    for g in corpus(40, 30, seed0=13):
        idx = build_triangle_index(g)
        vec = FastAdaptiveGreedy(g, DeltaMode.PAPER).scores()
        for u in range(g.n_vertices):
            assert vec[u] == pytest.approx(faga_delta(g, idx, u, DeltaMode.PAPER), abs=1e-9)


def test_incremental_index_matches_rebuild():
    for g in corpus(60, 40, seed0=14):
        engine = FastAdaptiveGreedy(g)
        for _ in range(g.n_vertices - 1):
            engine.step()
            assert engine.state.triangle_index() == build_triangle_index(engine.state.g)


# ---- faga ---------------------------------------------------------------

def test_faga_examples(paw):
    res = faga(paw, 1)
    assert res.removed == [0]
    assert res.alcc_trajectory == pytest.approx([7 / 12, 0.0], abs=1e-12)
    assert res.method == "faga"
    for mode in DeltaMode:
        res = faga(graph(K4), 2, mode)
        assert res.removed == [0, 1]
        # the residual K2 has no vertex of degree 2, so its ALCC is 0
        assert res.alcc_trajectory == pytest.approx([1.0, 1.0, 0.0], abs=1e-12)
    res = faga(graph(TWO_K3), 1)
    assert res.removed[0] in range(6)
    assert res.alcc_trajectory == pytest.approx([1.0, 3 / 5], abs=1e-12)


def test_faga_leaves_input_untouched(paw):
    before = paw.copy()
    faga(paw, 2)
    assert paw.same_as(before)


@pytest.mark.parametrize("k", [0, 4, 5, -1])
def test_budget_errors(paw, k):
    for name, solve in ALL_SOLVERS.items():
        with pytest.raises(GraphDomainError):
            solve(paw, k)


def test_exact_trajectories_non_increasing():
    for g in corpus(100, 40, seed0=15):
        traj = faga(g, g.n_vertices - 1).alcc_trajectory
        assert all(b <= a + 1e-12 for a, b in zip(traj, traj[1:]))


def test_results_are_recomputable():
    for g in corpus(15, 20, seed0=16):
        k = min(4, g.n_vertices - 1)
        for name, solve in ALL_SOLVERS.items():
            res = solve(g, k)
            check_result(g, res, k)


def test_determinism():
    g = gen_er(60, 0.15, seed=2)
    for name, solve in ALL_SOLVERS.items():
        if name == "optimal":
            a, b = solve(g, 2), solve(g, 2)
        else:
            a, b = solve(g, 6), solve(g, 6)
        assert a.removed == b.removed
        assert a.alcc_trajectory == b.alcc_trajectory
        assert a.max_lcc_trajectory == b.max_lcc_trajectory


# ---- simple greedy --------------------------------------------------------

def test_simple_greedy_examples(paw):
    assert simple_greedy(paw, 1).removed == [0]
    res = simple_greedy(graph(K4), 3)
    assert res.final_alcc == 0.0
    assert simple_greedy(graph(C4), 1).removed == [0]


def test_simple_greedy_picks_lowest_single_removals():
    for g in corpus(20, 25, seed0=17):
        k = min(3, g.n_vertices - 1)
        scores = {u: alcc_float(g.n_vertices, g.edges().tolist(), [u]) for u in range(g.n_vertices)}
        order = sorted(scores, key=lambda u: (round(scores[u], 12), u))[:k]
        assert simple_greedy(g, k).removed == order


# ---- optimal ------------------------------------------------------------

def test_optimal_examples(paw):
    res = optimal_exhaustive(paw, 1)
    assert res.removed == [0] and res.final_alcc == 0.0
    assert optimal_exhaustive(graph(K4), 1).final_alcc == 1.0
    res = optimal_exhaustive(graph(BOWTIE), 1)
    assert res.removed == [0] and res.final_alcc == 0.0


def test_optimal_matches_brute_force_and_dominates():
    for g in corpus(40, 12, seed0=18):
        n = g.n_vertices
        edges = g.edges().tolist()
        for k in range(1, min(4, n - 1) + 1):
            if comb(n, k) > 10**5:
                continue
            val, best_set = best_residual_alcc(n, edges, k)
            res = optimal_exhaustive(g, k)
            assert res.final_alcc == pytest.approx(float(val), abs=1e-9)
            assert tuple(sorted(res.removed)) == best_set
            for name, solve in ALL_SOLVERS.items():
                assert res.final_alcc <= solve(g, k).final_alcc + 1e-9, name


def test_optimal_candidates_restriction():
    g = graph(BOWTIE)
    res = optimal_exhaustive(g, 1, candidates=[1, 2, 3, 4])
    assert res.removed == [1]
    assert res.final_alcc == pytest.approx(alcc_float(5, BOWTIE, [1]), abs=1e-12)


def test_optimal_capacity_error():
    g = gen_er(40, 0.2, seed=0)
    with pytest.raises(CapacityError, match="C\\(40,10\\)"):
        optimal_exhaustive(g, 10, budget=10**6)


def test_optimal_triangle_free_input():
    res = optimal_exhaustive(graph(PETERSEN), 3)
    assert res.removed == [0, 1, 2] and res.final_alcc == 0.0


@pytest.mark.parametrize("m,r,rows", [(6, 3, 4), (7, 1, 3), (5, 5, 2), (9, 4, 1000)])
def test_lex_blocks_enumerate_in_order(m, r, rows):
    from itertools import combinations
    got = [tuple(x) for b in lex_combination_blocks(m, r, rows) for x in b.tolist()]
    assert got == list(combinations(range(m), r))


# ---- baselines ------------------------------------------------------------

def test_random_examples():
    g = gen_er(50, 0.1, seed=1)
    assert baseline_random(g, 10, 5).removed == baseline_random(g, 10, 5).removed
    assert baseline_random(g, 10, 5).removed != baseline_random(g, 10, 6).removed
    for s in range(10):
        assert baseline_random(graph(K3), 2, s).final_alcc == 0.0


def test_random_is_uniform():
    g = Graph.from_edges(1000, [(0, 1)])
    counts = np.zeros(1000)
    for s in range(1000):
        counts[baseline_random(g, 1, s).removed] += 1
    # 1000 single draws over 1000 vertices
    assert stats.chisquare(counts).pvalue > 1e-3
    counts = np.zeros(1000)
    for s in range(50):
        counts[baseline_random(g, 20, s).removed] += 1
    assert stats.chisquare(counts).pvalue > 1e-3


def test_max_degree_examples(paw):
    assert baseline_max_degree(graph([(0, i) for i in range(1, 6)]), 1).removed == [0]
    assert baseline_max_degree(graph(PATH3), 1).removed == [1]
    assert baseline_max_degree(paw, 1).removed == [0]


def test_lcc_greedy_examples(paw):
    assert baseline_lcc_greedy(paw, 1).removed == [1]
    assert baseline_lcc_greedy(graph(C4), 2).removed == [0, 1]
    g = graph(K3 + [(3, 4), (4, 5), (5, 6), (3, 6)])
    assert baseline_lcc_greedy(g, 1).removed[0] in (0, 1, 2)


def test_betweenness_examples():
    assert brandes_betweenness(graph(PATH3)).tolist() == [0.0, 1.0, 0.0]
    assert brandes_betweenness(graph(C4)) == pytest.approx([0.5] * 4)
    assert brandes_betweenness(graph(STAR4)).tolist() == [6.0, 0, 0, 0, 0]
    assert baseline_betweenness(graph([(i, i + 1) for i in range(4)]), 1).removed == [2]
    assert baseline_betweenness(graph(C4), 1).removed == [0]
    assert baseline_betweenness(graph(BARBELL), 1).removed[0] in (2, 3)


def test_betweenness_matches_path_enumeration():
    named = [PAW, K4, C4, BOWTIE, PETERSEN, BARBELL, STAR4]
    graphs = [graph(e) for e in named] + list(corpus(40, 12, seed0=19))
    for g in graphs:
        edges = g.edges().tolist()
        want = betweenness_by_paths(adjacency(g.n_vertices, edges))
        got = brandes_betweenness(g)
        for u in range(g.n_vertices):
            assert got[u] == pytest.approx(float(want[u]), abs=1e-9)


def test_betweenness_ignores_dead_vertices():
    g = graph([(i, i + 1) for i in range(4)])
    g.remove(3)
    assert brandes_betweenness(g).tolist() == [0.0, 1.0, 0.0, 0.0, 0.0]


# ---- cubic IP -----------------------------------------------------------

def test_ip_k3():
    mons = cubic_ip_monomials(graph(K3), 1)
    assert [m[0] for m in mons] == [Fraction(1, 2)] * 3
    assert [m[1:] for m in mons] == [(0, 1, 2), (1, 0, 2), (2, 0, 1)]
    text = emit_cubic_ip(graph(K3), 1)
    assert "# vars 3" in text and "# budget 1" in text
    assert text.strip().splitlines()[-1] == "sum z >= 2"


def test_ip_paw(paw):
    mons = cubic_ip_monomials(paw, 1)
    assert {m[1]: m[0] for m in mons} == {0: Fraction(1, 9), 1: Fraction(1, 3), 2: Fraction(1, 3)}
    assert all(3 not in m[1:] for m in mons)


def test_ip_triangle_free_has_no_monomials():
    text = emit_cubic_ip(graph(PETERSEN), 4)
    body = [ln for ln in text.splitlines() if not ln.startswith(("#", "var", "sum"))]
    assert body == []


def test_ip_objective_at_empty_removal_is_alcc_scaled():
    # with nothing removed, sum of monomials = N * ALCC / (N - k)
    for g in corpus(20, 20, seed0=20):
        k = 1
        total = sum(c for c, *_ in cubic_ip_monomials(g, k))
        n = g.n_vertices
        assert float(total) == pytest.approx(alcc(g) * n / (n - k), abs=1e-12)
