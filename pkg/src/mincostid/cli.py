"""Command-line entry point: ``mincostid solve|hull|verify|gen|bench|reduce-wmvc``.

Exit codes: 0 success, 1 bad input, 2 infeasible, 3 resource limit hit,
4 ``verify`` found the target not identifiable.
"""

import argparse
import json
import sys
import time

from . import bench
from .errors import GraphError, InfeasibleError, PreconditionError, ResourceLimitError
from .exact import (solve_approx_min_intervention, solve_exact_fewer_calls,
                    solve_exact_min_intervention, target_structure)
from .general import SUBSOLVERS, solve_general
from .graph import dumps_graph, load_graph, pac, save_graph
from .heuristics import choose_heuristic, heuristic1, heuristic2, heuristic_greedy, post_process
from .identification import is_identifiable_after
from .report import make_report

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_RESOURCE, EXIT_NOT_ID = 0, 1, 2, 3, 4

SINGLE = {
    "exact": solve_exact_min_intervention,
    "approx": solve_approx_min_intervention,
    "fewer-calls": solve_exact_fewer_calls,
    "heuristic1": heuristic1,
    "heuristic2": heuristic2,
    "greedy": heuristic_greedy,
}


def parse_vertices(g, text):
    if text is None or not text.strip():
        return frozenset()
    return frozenset(g.index(tok) for tok in text.split(",") if tok.strip())


def _names(g, X):
    return "{" + ", ".join(g.name(v) for v in sorted(X)) + "}"


def _solve_auto(g, S, exact_below, density_factor):
    _, comps, forced = target_structure(g, S)
    H = set()
    for c in comps:
        H |= g.kernel.hull(c, g.vertices - forced)
    if len(H - S) <= exact_below:
        rep = solve_exact_min_intervention(g, S)
    else:
        rep = choose_heuristic(g, S, density_factor)(g, S)
    rep.algorithm = f"auto:{rep.algorithm}"
    return rep


def cmd_solve(args):
    g = load_graph(args.graph)
    S = parse_vertices(g, args.target)
    if not S:
        raise PreconditionError("--target must name at least one vertex")
    if args.algo == "general":
        rep = solve_general(g, S, subsolver=args.subsolver, infinite_s=args.infinite_s)
    else:
        if args.infinite_s:
            g = g.with_infinite(S)
        if args.algo == "auto":
            rep = _solve_auto(g, S, args.exact_below, args.density_factor)
        else:
            rep = SINGLE[args.algo](g, S)
        if args.post_process:
            started = time.perf_counter() - rep.wall_time
            A = post_process(g, S, rep.intervention)
            rep = make_report(g, rep.algorithm + "+post", A, started,
                              hedges_discovered=rep.hedges_discovered,
                              hitting_set_calls=rep.hitting_set_calls)
    if args.json:
        print(json.dumps(rep.to_dict(g)))
    else:
        print(f"algorithm: {rep.algorithm}")
        for A in rep.result:
            print(f"set: {_names(g, A)}  indices: {sorted(A)}  cost: {g.cost(A)}")
        print(f"cost: {rep.cost}")
        print(f"hedges_discovered: {rep.hedges_discovered}")
        print(f"hitting_set_calls: {rep.hitting_set_calls}")
    return EXIT_OK


def cmd_hull(args):
    g = load_graph(args.graph)
    S = parse_vertices(g, args.target)
    if not S:
        raise PreconditionError("--target must name at least one vertex")
    _, comps, _ = target_structure(g, S)
    blocks = []
    for c in comps:
        P = pac(g, c)
        blocks.append({"component": c, "hull": g.kernel.hull(c, g.vertices), "pac": P,
                       "hull_without_pac": g.kernel.hull(c, g.vertices - P)})
    if args.json:
        print(json.dumps([{k: sorted(g.name(v) for v in b[k]) for k in b} for b in blocks]))
    else:
        for b in blocks:
            print(f"component {_names(g, b['component'])}: hull {_names(g, b['hull'])}"
                  f"  PaC {_names(g, b['pac'])}  hull without PaC {_names(g, b['hull_without_pac'])}")
    return EXIT_OK


def cmd_verify(args):
    g = load_graph(args.graph)
    S = parse_vertices(g, args.target)
    A = parse_vertices(g, args.set)
    ok = is_identifiable_after(g, S, A)
    print("identifiable" if ok else "not identifiable")
    return EXIT_OK if ok else EXIT_NOT_ID


def cmd_gen(args):
    cfg = bench.ExperimentConfig(n=args.n, p=args.p, q=args.q, trials=1, seed=args.seed)
    g, S = bench.make_instance(cfg, bench.trial_seeds(cfg)[0])
    if args.out:
        save_graph(g, args.out)
    else:
        print(dumps_graph(g))
    print("target: " + ",".join(g.name(v) for v in sorted(S)), file=sys.stderr)
    return EXIT_OK


def cmd_reduce_wmvc(args):
    with open(args.input, encoding="utf-8") as fh:
        h = json.load(fh)
    g, s = bench.reduce_wmvc(h["n"], h.get("edges", []), h.get("weights"), unit=args.unit)
    if args.out:
        save_graph(g, args.out)
    else:
        print(dumps_graph(g))
    print(f"target: {g.name(s)}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args):
    rows = []
    roster = tuple(args.roster.split(",")) if args.roster else bench.DEFAULT_ROSTER
    for n in args.n:
        cfg = bench.ExperimentConfig(n=n, p=args.p, q=args.q, trials=args.trials, seed=args.seed,
                                     roster=roster, record_time=not args.no_time)
        rows += bench.run_regret_experiment(cfg, jobs=args.jobs)
    text = bench.write_csv(rows, bench.CSV_COLUMNS)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for name, s in bench.summarize(rows, seed=args.seed).items():
        lo, hi = s["ci95"]
        print(f"{name}: mean regret {s['mean_regret']:.4f} [{lo:.4f}, {hi:.4f}] "
              f"over {s['completed']}/{s['trials']} trials, {s['mean_wall_ms']:.2f} ms",
              file=sys.stderr)
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="mincostid", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("graph", help="graph JSON file")
        sp.add_argument("--target", "-t", required=True, help="comma-separated names or indices")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        fmt.add_argument("--text", dest="json", action="store_false")
        return sp

    sp = graph_cmd("solve", "min-cost intervention for Q[S]")
    sp.add_argument("--algo", default="exact", choices=sorted(SINGLE) + ["auto", "general"])
    sp.add_argument("--subsolver", default="exact", choices=sorted(SUBSOLVERS),
                    help="per-block solver for --algo general")
    sp.add_argument("--infinite-s", action="store_true", help="forbid interventions on S")
    sp.add_argument("--post-process", action="store_true", help="drop redundant vertices")
    sp.add_argument("--exact-below", type=int, default=16,
                    help="--algo auto runs exact when |hull minus S| is at most this")
    sp.add_argument("--density-factor", type=float, default=1.0)
    sp.set_defaults(func=cmd_solve)

    sp = graph_cmd("hull", "hedge hull, PaC, and the hull left once PaC is removed, per c-component of S")
    sp.set_defaults(func=cmd_hull)

    sp = graph_cmd("verify", "exit 0 iff Q[S] is identifiable after intervening on --set")
    sp.add_argument("--set", default="", help="comma-separated intervention set")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="random ADMG with a target drawn from the last vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, default=0.35)
    sp.add_argument("--q", type=float, default=0.25)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", "-o")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("reduce-wmvc", help="vertex-cover gadget graph from {n, edges, weights}")
    sp.add_argument("input")
    sp.add_argument("--unit", action="store_true", help="give every vertex cost 1")
    sp.add_argument("--out", "-o")
    sp.set_defaults(func=cmd_reduce_wmvc)

    sp = sub.add_parser("bench", help="regret experiment; CSV on stdout or --out")
    sp.add_argument("--n", type=int, nargs="+", default=[10, 15, 20])
    sp.add_argument("--p", type=float, default=0.35)
    sp.add_argument("--q", type=float, default=0.25)
    sp.add_argument("--trials", type=int, default=40)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--roster", help="comma-separated algorithms")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-time", action="store_true", help="leave wall_ms empty for byte-stable CSV")
    sp.add_argument("--out", "-o")
    sp.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as e:
        print(f"error: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}", file=sys.stderr)
        return EXIT_INPUT
    except InfeasibleError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphError, PreconditionError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
