"""Wall time of FAGA and simple greedy as N grows (ER, mean degree about 10)."""

import argparse
import time

from clustervuln.attack_solvers import faga, simple_greedy
from clustervuln.generators import gen_er


def timed(f, *a):
    t = time.perf_counter()
    f(*a)
    return time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="500,1000,2000,5000,10000")
    ap.add_argument("--k", type=int, default=20)
    ap.add_argument("--greedy-max-n", type=int, default=2000)
    args = ap.parse_args()

    faga(gen_er(50, 0.2, 0), 2)  # compile / warm caches
    print("N,M,faga_s,simple_greedy_s")
    for n in (int(x) for x in args.sizes.split(",")):
        g = gen_er(n, 10.0 / n, 0)
        fa = timed(faga, g, args.k)
        sg = timed(simple_greedy, g, args.k) if n <= args.greedy_max_n else float("nan")
        print(f"{n},{g.n_edges},{fa:.4f},{sg:.4f}")


if __name__ == "__main__":
    main()
