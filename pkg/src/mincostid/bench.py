"""Random instances, the vertex-cover gadget, and the regret/hedge-count experiments.

Randomness comes from numpy's PCG64. A run with seed ``seed`` spawns one
child ``SeedSequence`` per trial; the trial's instance seed is the first
64-bit word of that child's state and is written to the CSV, so any single
trial can be regenerated with ``make_instance(cfg, instance_seed)``.
"""

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace

import numpy as np

from .errors import MinCostIDError
from .exact import solve_exact_min_intervention, target_structure
from .graph import CausalGraph, is_c_component
from .identification import enumerate_hedges
from .general import SUBSOLVERS

CSV_COLUMNS = ("trial", "n", "p", "q", "seed", "algorithm", "cost", "optimal_cost",
               "regret", "wall_ms", "hedges_discovered", "hitting_set_calls")
HEDGE_COLUMNS = ("trial", "n", "p", "q", "seed", "hull_size", "hedges_in_graph",
                 "total_hedges", "hedges_discovered", "ratio")
DEFAULT_ROSTER = ("exact", "approx", "heuristic1", "heuristic2", "greedy")


@dataclass(frozen=True)
class ExperimentConfig:
    n: int = 20
    p: float = 0.35
    q: float = 0.25
    costs: tuple = (1, 2, 3, 4)
    s_fraction: float = 0.05
    max_s_tries: int = 1000
    trials: int = 40
    seed: int = 0
    roster: tuple = DEFAULT_ROSTER
    record_time: bool = True
    max_hedges: int = 10**6

    def __post_init__(self):
        if not (0 <= self.p <= 1 and 0 <= self.q <= 1):
            raise ValueError("p and q must lie in [0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 < self.s_fraction <= 1:
            raise ValueError("s_fraction must lie in (0, 1]")
        if not self.roster:
            raise ValueError("roster must name at least one algorithm")
        unknown = set(self.roster) - set(SUBSOLVERS)
        if unknown:
            raise ValueError(f"unknown algorithms in roster: {sorted(unknown)}")


@dataclass(frozen=True)
class RegretRecord:
    trial: int
    n: int
    p: float
    q: float
    seed: int
    algorithm: str
    cost: float
    optimal_cost: float
    regret: float
    wall_ms: float
    hedges_discovered: int
    hitting_set_calls: int


def gen_erdos_renyi_admg(n, p, q, seed=None, costs=(1, 2, 3, 4), rng=None):
    """Random ADMG over the causal order 0 < 1 < ... < n-1.

    Every pair i < j independently gets i -> j with probability p and
    i <-> j with probability q. Vertex costs are drawn uniformly from ``costs``.
    """
    rng = np.random.default_rng(seed) if rng is None else rng
    iu, ju = np.triu_indices(n, 1)
    d = rng.random(iu.size) < p
    b = rng.random(iu.size) < q
    c = rng.choice(np.asarray(costs), size=n)
    return CausalGraph(
        n,
        directed=list(zip(iu[d].tolist(), ju[d].tolist())),
        bidirected=list(zip(iu[b].tolist(), ju[b].tolist())),
        costs=c.tolist(),
    )


def choose_target(g, rng, fraction=0.05, max_tries=1000):
    """A random nonempty c-component among the last ``fraction`` of the causal order.

    Returns None after ``max_tries`` rejected subsets.
    """
    m = max(1, math.ceil(fraction * g.n))
    top = np.arange(g.n - m, g.n)
    for _ in range(max_tries):
        pick = top[rng.random(m) < 0.5]
        if pick.size and is_c_component(g, pick.tolist()):
            return frozenset(pick.tolist())
    return None


def make_instance(cfg, instance_seed):
    rng = np.random.default_rng(instance_seed)
    while True:
        g = gen_erdos_renyi_admg(cfg.n, cfg.p, cfg.q, costs=cfg.costs, rng=rng)
        S = choose_target(g, rng, cfg.s_fraction, cfg.max_s_tries)
        if S is not None:
            return g, S


def trial_seeds(cfg):
    return [int(c.generate_state(1, dtype=np.uint64)[0])
            for c in np.random.SeedSequence(cfg.seed).spawn(cfg.trials)]


def reduce_wmvc(n_h, edges, weights=None, unit=False):
    """Gadget graph whose min-cost intervention for Q[{s}] is a min vertex cover.

    Vertices: the h-vertices 0..n_h-1, then u_xy and w_xy for each edge
    (x < y), then s. Each edge adds u->x, x->y, y->w, w->s and u<->x, u<->y,
    u<->w, u<->s. Gadget vertices and s cost z = n_h * max weight + 1
    (or everything costs 1 with ``unit``).
    """
    weights = [1] * n_h if weights is None else list(weights)
    if len(weights) != n_h:
        raise ValueError("need one weight per vertex")
    es = sorted({(min(x, y), max(x, y)) for x, y in edges})
    if any(x == y or not 0 <= x < n_h or not 0 <= y < n_h for x, y in es):
        raise ValueError("edges must join two distinct vertices in range")
    z = n_h * max(weights, default=0) + 1
    names = [f"h{x}" for x in range(n_h)]
    directed, bidirected = [], []
    s = n_h + 2 * len(es)
    for i, (x, y) in enumerate(es):
        u, w = n_h + 2 * i, n_h + 2 * i + 1
        names += [f"u_{x}_{y}", f"w_{x}_{y}"]
        directed += [(u, x), (x, y), (y, w), (w, s)]
        bidirected += [(u, x), (u, y), (u, w), (u, s)]
    names.append("s")
    costs = [1] * (s + 1) if unit else weights + [z] * (s + 1 - n_h)
    return CausalGraph(s + 1, directed, bidirected, costs=costs, names=names), s


def intervention_to_cover(n_h, edges, A):
    """Map an identifying intervention on a gadget graph back to a vertex cover.

    A gadget vertex u_xy or w_xy is replaced by x; this never increases size.
    """
    es = sorted({(min(x, y), max(x, y)) for x, y in edges})
    cover = set()
    for v in A:
        if v < n_h:
            cover.add(v)
        elif v < n_h + 2 * len(es):
            cover.add(es[(v - n_h) // 2][0])
    return frozenset(cover)


def _run_trial(cfg, trial, seed):
    g, S = make_instance(cfg, seed)
    out = {}
    for name in dict.fromkeys(("exact",) + tuple(cfg.roster)):
        solver = SUBSOLVERS[name]
        kw = {"max_hedges": cfg.max_hedges} if name in ("exact", "approx", "fewer-calls") else {}
        try:
            rep = solver(g, S, **kw)
        except MinCostIDError:
            out[name] = (math.nan, math.nan, 0, 0)
        else:
            out[name] = (rep.cost, rep.wall_time * 1e3, rep.hedges_discovered, rep.hitting_set_calls)
    best = out["exact"][0]
    rows = []
    for name in cfg.roster:
        cost, ms, hd, hc = out[name]
        rows.append(RegretRecord(trial, cfg.n, cfg.p, cfg.q, seed, name, cost, best,
                                 regret(cost, best), ms if cfg.record_time else math.nan, hd, hc))
    return rows


def regret(cost, optimal):
    """Normalized regret (C - C*) / C*; 0/0 counts as 0."""
    if math.isnan(cost) or math.isnan(optimal):
        return math.nan
    if optimal == 0:
        return 0.0 if cost == 0 else math.inf
    return (cost - optimal) / optimal


def run_regret_experiment(cfg, jobs=1):
    """Run every roster algorithm on ``cfg.trials`` seeded instances.

    The exact solver always runs and supplies C*; it is reported only if it
    is in the roster. Rows come back ordered by trial, then roster order.
    """
    seeds = trial_seeds(cfg)
    args = [(cfg, t, s) for t, s in enumerate(seeds)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            batches = list(pool.map(_run_trial_args, args))
    else:
        batches = [_run_trial(*a) for a in args]
    return [r for b in sorted(batches, key=lambda b: b[0].trial) for r in b]


def _run_trial_args(a):
    return _run_trial(*a)


def _fmt(v):
    if isinstance(v, float):
        if math.isnan(v):
            return ""
        if math.isinf(v):
            return "inf"
        return repr(v)
    return str(v)


def write_csv(rows, columns, fh=None):
    """Write dataclass rows as CSV; returns the text when ``fh`` is None."""
    buf = io.StringIO() if fh is None else fh
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        d = asdict(r) if not isinstance(r, dict) else r
        w.writerow([_fmt(d[c]) for c in columns])
    return buf.getvalue() if fh is None else None


def bootstrap_ci(values, level=0.95, resamples=1000, seed=0):
    """Percentile bootstrap interval for the mean; NaNs are dropped."""
    x = np.asarray([v for v in values if not math.isnan(v)], dtype=float)
    if x.size == 0:
        return (math.nan, math.nan)
    rng = np.random.default_rng(seed)
    means = x[rng.integers(0, x.size, size=(resamples, x.size))].mean(axis=1)
    a = (1 - level) / 2
    lo, hi = np.quantile(means, [a, 1 - a])
    return float(lo), float(hi)


def summarize(rows, seed=0):
    """Per algorithm: completed trials, mean regret with bootstrap CI, mean wall time."""
    out = {}
    for name in dict.fromkeys(r.algorithm for r in rows):
        rs = [r for r in rows if r.algorithm == name]
        reg = [r.regret for r in rs if not math.isnan(r.regret)]
        ms = [r.wall_ms for r in rs if not math.isnan(r.wall_ms)]
        out[name] = {
            "trials": len(rs),
            "completed": len(reg),
            "mean_regret": float(np.mean(reg)) if reg else math.nan,
            "ci95": bootstrap_ci(reg, seed=seed),
            "mean_wall_ms": float(np.mean(ms)) if ms else math.nan,
        }
    return out


def hedge_counts(g, S, limit=10**6):
    """Number of hedges for a c-component S in the whole graph and once PaC(S) is removed."""
    _, _, forced = target_structure(g, S)
    return (len(enumerate_hedges(g, S, limit=limit)),
            len(enumerate_hedges(g, S, g.vertices - forced, limit=limit)))


@dataclass(frozen=True)
class HedgeCountRecord:
    trial: int
    n: int
    p: float
    q: float
    seed: int
    hull_size: int
    hedges_in_graph: int
    total_hedges: int
    hedges_discovered: int
    ratio: float


def count_hedges_vs_discovered(cfg, max_hull_extra=18, limit=10**6):
    """Compare the number of hedges (after removing PaC(S)) with how many the
    exact solver discovers. Instances whose hull has more than
    ``max_hull_extra`` vertices outside S are redrawn from the trial's stream."""
    rows = []
    for trial, seed in enumerate(trial_seeds(cfg)):
        s = seed
        while True:
            g, S = make_instance(cfg, s)
            _, _, forced = target_structure(g, S)
            within = g.vertices - forced
            H = g.kernel.hull(S, within)
            if len(H - S) <= max_hull_extra:
                break
            s = int(np.random.SeedSequence(s).generate_state(1, dtype=np.uint64)[0])
        in_graph, total = hedge_counts(g, S, limit)
        found = solve_exact_min_intervention(g, S).hedges_discovered
        rows.append(HedgeCountRecord(trial, cfg.n, cfg.p, cfg.q, s, len(H - S), in_graph, total,
                                     found, found / total if total else math.nan))
    return rows


def config_from_args(**kw):
    known = {f.name for f in fields(ExperimentConfig)}
    return replace(ExperimentConfig(), **{k: v for k, v in kw.items() if k in known and v is not None})
