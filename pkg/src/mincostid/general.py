"""Min-cost intervention collections for an arbitrary target S.

Each maximal c-component of G[S] must be identified by one set of the
collection, so the optimum is found by trying every way of grouping the
components and solving one single-set problem per group.
"""

import math
import time

from .errors import InfeasibleError, PreconditionError, ResourceLimitError
from .exact import (solve_approx_min_intervention, solve_exact_fewer_calls,
                    solve_exact_min_intervention, target_structure)
from .heuristics import heuristic1, heuristic2, heuristic_auto, heuristic_greedy
from .report import InterventionCollection, SolveReport

SUBSOLVERS = {
    "exact": solve_exact_min_intervention,
    "fewer-calls": solve_exact_fewer_calls,
    "approx": solve_approx_min_intervention,
    "greedy": heuristic_greedy,
    "heuristic1": heuristic1,
    "heuristic2": heuristic2,
    "heuristic": heuristic_auto,
}

DEFAULT_MAX_COMPONENTS = 12


def enumerate_set_partitions(k):
    """Yield every partition of ``range(k)`` once, as a list of blocks.

    Partitions are generated from restricted growth strings
    a[0] = 0, a[i] <= 1 + max(a[:i]) in lexicographic order; element i goes
    to block a[i].
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        yield []
        return
    a = [0] * k
    peak = [0] * k  # peak[i] = max(a[:i+1])
    while True:
        blocks = [[] for _ in range(peak[-1] + 1)]
        for i, b in enumerate(a):
            blocks[b].append(i)
        yield blocks
        i = k - 1
        while i > 0 and a[i] > peak[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        peak[i] = max(peak[i - 1], a[i])
        for j in range(i + 1, k):
            a[j] = 0
            peak[j] = peak[i]


def bell_number(k):
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def solve_general(g, S, subsolver="exact", infinite_s=False,
                  max_components=DEFAULT_MAX_COMPONENTS):
    """Cheapest intervention collection identifying Q[S].

    With ``subsolver="exact"`` the result is optimal. ``infinite_s`` makes
    every vertex of S non-intervenable before solving.
    """
    started = time.perf_counter()
    solve = SUBSOLVERS[subsolver] if isinstance(subsolver, str) else subsolver
    S, comps, _ = target_structure(g, S)
    if infinite_s:
        g = g.with_infinite(S)
    k = len(comps)
    if k > max_components:
        raise ResourceLimitError(
            f"S has {k} maximal c-components ({bell_number(k)} partitions); "
            f"limit is {max_components}. Use a heuristic subsolver on S directly.")

    memo = {}
    hedges = calls = 0

    def block(key):
        nonlocal hedges, calls
        if key not in memo:
            try:
                rep = solve(g, key)
            except InfeasibleError:
                memo[key] = None
            else:
                hedges += rep.hedges_discovered
                calls += rep.hitting_set_calls
                memo[key] = (rep.intervention, rep.cost)
        return memo[key]

    best = None
    best_cost = math.inf
    for partition in enumerate_set_partitions(k):
        sets = []
        cost = 0
        for blk in partition:
            key = frozenset().union(*(comps[i] for i in blk))
            got = block(key)
            if got is None:
                cost = math.inf
                break
            sets.append(got[0])
            cost += got[1]
        if cost < best_cost:
            # two blocks may share a set; one copy identifies both
            uniq = list(dict.fromkeys(sets))
            best, best_cost = uniq, sum(g.cost(A) for A in uniq)
    if best is None:
        raise InfeasibleError("no finite-cost intervention collection identifies Q[S]")
    coll = InterventionCollection(tuple(best))
    return SolveReport(f"general:{subsolver if isinstance(subsolver, str) else solve.__name__}",
                       coll, coll.cost(g), hedges_discovered=hedges, hitting_set_calls=calls,
                       wall_time=time.perf_counter() - started,
                       extra={"components": [sorted(c) for c in comps],
                              "partitions": bell_number(k)})


def solve_singleton_infinite_s(g, S, max_hedges=None):
    """Single optimal set when no vertex of S may be intervened on.

    With S non-intervenable a single set is always at least as cheap as any
    collection, so the exact single-set solver is already optimal.
    """
    started = time.perf_counter()
    S = g.vset(S)
    if not S:
        raise PreconditionError("target set is empty")
    g = g.with_infinite(S)
    kw = {} if max_hedges is None else {"max_hedges": max_hedges}
    rep = solve_exact_min_intervention(g, S, **kw)
    rep.algorithm = "singleton-infinite-s"
    rep.wall_time = time.perf_counter() - started
    return rep
