"""Compare the compiled and pure-Python reachability kernels.

    python benchmarks/bench_kernels.py [--n 50 100 200 400] [--repeat 20]

For each size the same random graph and target are timed on both backends:
the raw hull kernel, and the two cut heuristics plus the greedy heuristic end
to end. Results go to stdout as CSV with one row per (n, task, backend).
"""

import argparse
import csv
import statistics
import sys
import time

from mincostid import _kernel, bench, heuristic1, heuristic2, heuristic_greedy


def timed(fn, repeat):
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return statistics.median(out)


def tasks(g, S):
    within = g.vertices
    return {
        "hull": lambda: g.kernel.hull(S, within),
        "ancestors": lambda: g.kernel.ancestors(S, within),
        "heuristic1": lambda: heuristic1(g, S),
        "heuristic2": lambda: heuristic2(g, S),
        "greedy": lambda: heuristic_greedy(g, S),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = sorted(_kernel.BACKENDS)
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is timed", file=sys.stderr)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "task", "backend", "median_ms", "speedup_vs_python"])
    old = _kernel.backend()
    try:
        for n in args.n:
            cfg = bench.ExperimentConfig(n=n, trials=1, seed=args.seed)
            base, S = bench.make_instance(cfg, bench.trial_seeds(cfg)[0])
            times = {}
            for b in backends:
                _kernel.set_backend(b)
                # fresh copy so no kernel built under another backend is reused
                g = base.with_costs(base.costs)
                for name, fn in tasks(g, S).items():
                    fn()
                    times[name, b] = timed(fn, args.repeat)
            for name in tasks(base, S):
                ref = times[name, "python"]
                for b in backends:
                    t = times[name, b]
                    w.writerow([n, name, b, f"{t * 1e3:.4f}", f"{ref / t:.2f}" if t else ""])
    finally:
        _kernel.set_backend(old)
    return 0


if __name__ == "__main__":
    sys.exit(main())
