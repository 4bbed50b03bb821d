"""Batch CLI: generate graphs, run attacks and influence sweeps, emit CSV."""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from clustervuln.attack_solvers import (
    AttackResult,
    DeltaMode,
    baseline_betweenness,
    baseline_lcc_greedy,
    baseline_max_degree,
    baseline_random,
    emit_cubic_ip,
    faga,
    optimal_exhaustive,
    simple_greedy,
)
from clustervuln.clustering_metrics import alcc, build_triangle_index, max_lcc
from clustervuln.generators import gen_ba, gen_er, gen_ws_torus, parse_dimacs, reduce_3sat
from clustervuln.graph_core import Graph, GraphDomainError, parse_edge_list, write_edge_list
from clustervuln.influence_sim import Model, ic_spread, lt_spread

log = logging.getLogger(__name__)

ATTACK_COLUMNS = ["run_id", "method", "seed", "step", "removed_vertex", "alcc", "max_lcc",
                  "elapsed_ms"]
INFLUENCE_COLUMNS = ["p", "alcc", "alcc_normalized", "mean_spread", "spread_normalized"]
SIMPLE_GREEDY_MAX_N = 5000
VERIFY_TOL = 1e-9

Solver = Callable[[Graph, int, int, DeltaMode], AttackResult]

SOLVERS: dict[str, Solver] = {
    "faga": lambda g, k, seed, mode: faga(g, k, mode),
    "simple_greedy": lambda g, k, seed, mode: simple_greedy(g, k),
    "lcc_greedy": lambda g, k, seed, mode: baseline_lcc_greedy(g, k),
    "max_degree": lambda g, k, seed, mode: baseline_max_degree(g, k),
    "betweenness": lambda g, k, seed, mode: baseline_betweenness(g, k),
    "random": lambda g, k, seed, mode: baseline_random(g, k, seed),
    "optimal": lambda g, k, seed, mode: optimal_exhaustive(g, k),
}
DEFAULT_METHODS = ["faga", "simple_greedy", "lcc_greedy", "max_degree", "betweenness", "random"]


class UsageError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    input: str | None = None              # edge-list path
    gen: str | None = None                # "er:n,p" | "ba:n,m" | "ws:n,k,p"
    methods: list[str] = field(default_factory=lambda: list(DEFAULT_METHODS))
    k: int | None = None
    k_fraction: float | None = None
    seeds: list[int] = field(default_factory=lambda: [0])
    mode: DeltaMode = DeltaMode.EXACT
    out: str | None = None
    include_simple_greedy: bool = False   # keep simple_greedy even when N > 5000

    def __post_init__(self):
        if not self.methods:
            raise UsageError("at least one method is required")
        unknown = [m for m in self.methods if m not in SOLVERS]
        if unknown:
            raise UsageError(f"unknown method(s): {', '.join(unknown)}; "
                             f"choose from {', '.join(SOLVERS)}")
        if (self.input is None) == (self.gen is None):
            raise UsageError("exactly one of input / gen is required")
        if not self.seeds:
            raise UsageError("at least one seed is required")


def generate(spec: str, seed: int) -> Graph:
    """Build a graph from ``er:n,p``, ``ba:n,m`` or ``ws:n,k,p``."""
    try:
        kind, _, args = spec.partition(":")
        vals = args.split(",")
        if kind == "er" and len(vals) == 2:
            return gen_er(int(vals[0]), float(vals[1]), seed)
        if kind == "ba" and len(vals) == 2:
            return gen_ba(int(vals[0]), int(vals[1]), seed)
        if kind == "ws" and len(vals) == 3:
            return gen_ws_torus(int(vals[0]), int(vals[1]), float(vals[2]), seed)
    except ValueError as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from None
    raise UsageError(f"bad generator spec {spec!r}; expected er:n,p | ba:n,m | ws:n,k,p")


def load_graph(cfg: ExperimentConfig) -> Graph:
    if cfg.input is not None:
        return parse_edge_list(Path(cfg.input).read_bytes())
    return generate(cfg.gen, cfg.seeds[0])


def resolve_k(n: int, k: int | None = None, k_fraction: float | None = None) -> int:
    """Absolute ``k`` wins; a fraction resolves to ``max(1, floor(fraction * N))``."""
    if k is None:
        if k_fraction is None:
            raise UsageError("one of k / k_fraction is required")
        if not 0.0 < k_fraction < 1.0:
            raise UsageError(f"k_fraction must lie in (0, 1), got {k_fraction}")
        k = max(1, math.floor(k_fraction * n))
    if not 1 <= k < n:
        raise UsageError(f"k={k} must satisfy 1 <= k < N={n}")
    return k


def residual_alcc(g: Graph, removed: Sequence[int]) -> float:
    h = g.copy()
    for u in removed:
        h.remove(u)
    return alcc(h)


def attack_rows(result: AttackResult, run_id: str, seed: int) -> list[dict]:
    rows = []
    for step, (a, m) in enumerate(zip(result.alcc_trajectory, result.max_lcc_trajectory)):
        rows.append({
            "run_id": run_id,
            "method": result.method,
            "seed": seed,
            "step": step,
            "removed_vertex": result.removed[step - 1] if step else "",
            "alcc": a,
            "max_lcc": m,
            "elapsed_ms": result.elapsed[step - 1] if step else result.setup_ms,
        })
    return rows


def run_attack(cfg: ExperimentConfig, g: Graph | None = None) -> list[dict]:
    """One row per step (step 0 = intact graph) for every (method, seed) pair.

    The final ALCC of each run is checked against a from-scratch recomputation.
    Rows are ordered by (method order, seed order, step).
    """
    if g is None:
        g = load_graph(cfg)
    k = resolve_k(g.n_alive, cfg.k, cfg.k_fraction)
    methods = list(cfg.methods)
    if (g.n_alive > SIMPLE_GREEDY_MAX_N and "simple_greedy" in methods
            and not cfg.include_simple_greedy):
        log.warning("skipping simple_greedy on N=%d > %d", g.n_alive, SIMPLE_GREEDY_MAX_N)
        methods.remove("simple_greedy")
    rows: list[dict] = []
    for method in methods:
        for seed in cfg.seeds:
            result = SOLVERS[method](g, k, seed, cfg.mode)
            check = residual_alcc(g, result.removed)
            if abs(check - result.final_alcc) > VERIFY_TOL:
                raise RuntimeError(f"{method} seed {seed}: tracked ALCC {result.final_alcc} "
                                   f"!= recomputed {check}")
            rows += attack_rows(result, f"{method}:{seed}", seed)
    return rows


def run_influence(p_values: Sequence[float], model: Model | str = Model.IC, trials: int = 1000,
                  seed: int = 0, n: int = 100, k_hops: int = 3,
                  edge_prob: float = 0.5) -> list[dict]:
    """ALCC and mean spread of a single random seed vertex across WS rewiring levels.

    Normalisation divides by the ``p = 0`` lattice values. Every ``p`` uses the
    same master seed for graph and cascade, i.e. common random numbers.
    """
    model = Model(model)
    for p in p_values:
        if not 0.0 <= p <= 1.0:
            raise UsageError(f"rewiring probability {p} outside [0, 1]")

    def measure(p: float) -> tuple[float, float]:
        g = gen_ws_torus(n, k_hops, p, seed)
        if model == Model.IC:
            est = ic_spread(g, None, edge_prob, trials, seed)
        else:
            est = lt_spread(g, None, trials, seed)
        return alcc(g), est.mean_activations

    cache = {float(p): measure(float(p)) for p in p_values}
    if 0.0 not in cache:
        cache[0.0] = measure(0.0)
    a0, s0 = cache[0.0]
    rows = []
    for p in p_values:
        a, s = cache[float(p)]
        rows.append({"p": float(p), "alcc": a, "alcc_normalized": a / a0 if a0 else float("nan"),
                     "mean_spread": s, "spread_normalized": s / s0})
    return rows


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def write_csv(rows: Sequence[dict], columns: Sequence[str], path: str | Path | None = None) -> str:
    """Header plus one line per row, floats at 12 significant digits."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in columns])
    text = buf.getvalue()
    if path is not None:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    return text


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write {out}: {exc.strerror}") from exc


def _graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="edge-list file")
    src.add_argument("--gen", metavar="SPEC", help='"er:n,p" | "ba:n,m" | "ws:n,k,p"')
    p.add_argument("--seed", default="0", help="integer seed, or comma list for attack runs")
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")


def _seeds(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad --seed {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clustervuln", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    _graph_args(p)

    p = sub.add_parser("alcc", help="print N, M, triangles, ALCC and max-LCC")
    _graph_args(p)

    p = sub.add_parser("attack", help="run removal strategies, CSV trajectories")
    _graph_args(p)
    p.add_argument("--methods", default=",".join(DEFAULT_METHODS))
    kk = p.add_mutually_exclusive_group(required=True)
    kk.add_argument("--k", type=int)
    kk.add_argument("--k-frac", type=float)
    p.add_argument("--mode", choices=[m.value for m in DeltaMode], default="exact")
    p.add_argument("--include-simple-greedy", action="store_true",
                   help=f"run simple_greedy even when N > {SIMPLE_GREEDY_MAX_N}")

    p = sub.add_parser("influence", help="ALCC vs expected spread over WS rewiring levels")
    p.add_argument("--p-grid", default="0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")
    p.add_argument("--model", choices=[m.value for m in Model], default="ic")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=100, help="torus side length")
    p.add_argument("--k-hops", type=int, default=3)
    p.add_argument("--edge-prob", type=float, default=0.5, help="IC activation probability")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("reduce3sat", help="3-SAT (DIMACS) to CSA instance")
    p.add_argument("--input", metavar="PATH", required=True)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("emit-ip", help="write the cubic 0/1 program for a graph")
    _graph_args(p)
    p.add_argument("--k", type=int, required=True)
    return parser


def _run(args: argparse.Namespace) -> None:
    if args.command == "influence":
        grid = [float(x) for x in args.p_grid.split(",") if x.strip()]
        rows = run_influence(grid, args.model, args.trials, args.seed, args.n, args.k_hops,
                             args.edge_prob)
        _emit(write_csv(rows, INFLUENCE_COLUMNS), args.out)
        return
    if args.command == "reduce3sat":
        inst = reduce_3sat(parse_dimacs(Path(args.input).read_text()))
        head = [f"# k {inst.k}"] + [f"# role {v} {r}" for v, r in enumerate(inst.vertex_roles)]
        _emit("\n".join(head) + "\n" + write_edge_list(inst.graph).decode(), args.out)
        return

    seeds = _seeds(args.seed)
    if args.command == "attack":
        cfg = ExperimentConfig(input=args.input, gen=args.gen,
                               methods=[m.strip() for m in args.methods.split(",") if m.strip()],
                               k=args.k, k_fraction=args.k_frac, seeds=seeds,
                               mode=DeltaMode(args.mode), out=args.out,
                               include_simple_greedy=args.include_simple_greedy)
        _emit(write_csv(run_attack(cfg), ATTACK_COLUMNS), cfg.out)
        return

    g = load_graph(ExperimentConfig(input=args.input, gen=args.gen, seeds=seeds))
    if args.command == "gen":
        _emit(write_edge_list(g).decode(), args.out)
    elif args.command == "alcc":
        idx = build_triangle_index(g)
        text = (f"N {g.n_alive}\nM {g.n_edges}\ntriangles {idx.n_triangles}\n"
                f"alcc {_fmt(alcc(g))}\nmax_lcc {_fmt(max_lcc(g))}\n")
        _emit(text, args.out)
    elif args.command == "emit-ip":
        _emit(emit_cubic_ip(g, args.k), args.out)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _run(args)
    except (UsageError, GraphDomainError, OSError, RuntimeError, ValueError) as exc:
        print(f"clustervuln: error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, UsageError) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
