"""Minimum-cost single intervention for Q[S] by iterative hedge discovery.

The solver never enumerates all hedges. It repeatedly shrinks the hedge hull
by dropping its cheapest vertex until the hull collapses; the last non-trivial
hull is a hedge and is recorded. A minimum hitting set of the recorded hedges
is a lower bound on the optimum, so once it identifies Q[S] it is optimal.
Otherwise the hull left after intervening on it yields new, unhit hedges.

For an S that splits into several maximal c-components, hedges are
discovered per component and all of them feed one hitting-set pool.
"""

import math
import time

import numpy as np

from .errors import InfeasibleError, PreconditionError, ResourceLimitError
from .graph import maximal_c_components, pac
from .hitting_set import HittingSetInstance, greedy_bitsets, solve_exact
from .report import make_report

DEFAULT_MAX_HEDGES = 10**6


def target_structure(g, S):
    """Split S into maximal c-components and collect their forced parents.

    Returns ``(S, components, forced)`` where ``forced`` is the union of
    PaC over the components; every identifying intervention contains it.
    """
    S = g.vset(S)
    if not S:
        raise PreconditionError("target set is empty")
    comps = maximal_c_components(g, S)
    forced = frozenset().union(*(pac(g, c) for c in comps))
    return S, comps, forced


def require_finite(g, forced):
    """Forced parents belong to every identifying set; an infinite one rules out any solution."""
    bad = sorted(v for v in forced if math.isinf(g.costs[v]))
    if bad:
        raise InfeasibleError(
            f"PaC(S) contains non-intervenable vertices {[g.name(v) for v in bad]}")


def _hulls(g, comps, within):
    k = g.kernel
    return [k.hull(c, within) for c in comps]


def _collapsed(comps, hulls):
    return all(len(h) == len(c) for c, h in zip(comps, hulls))


def _discover(g, comp, H, S):
    """Shrink hull H of ``comp`` by its cheapest non-target vertex until it collapses.

    Returns the last hull before collapse (a hedge) and the vertex whose
    removal collapsed it.
    """
    k = g.kernel
    costs = g.costs
    while True:
        a = min(H - S, key=lambda v: (costs[v], v))
        H2 = k.hull(comp, H - {a})
        if len(H2) == len(comp):
            return H, a
        H = H2


class _HedgePool:
    """Distinct hedges found so far, minus S.

    For the greedy rule the hedges are also kept as packed column bitsets
    that grow in place, so a hitting-set call costs a few word operations
    per column instead of a rebuild of the whole instance.
    """

    def __init__(self, g, S, exact):
        self.g = g
        self.S = S
        self.exact = exact
        self.cols = sorted(v for v in g.vertices - S if not math.isinf(g.costs[v]))
        self.col = {v: j for j, v in enumerate(self.cols)}
        self.bits = np.zeros((len(self.cols), 4), dtype=np.uint64)
        self.sets = []
        self.seen = set()
        self.found = 0

    def add(self, F):
        self.found += 1
        F = F - self.S
        if F in self.seen:
            return
        self.seen.add(F)
        js = [self.col[v] for v in F if v in self.col]
        if not js:
            raise InfeasibleError(f"set {sorted(F)} contains only infinite-weight elements")
        i = len(self.sets)
        if i // 64 == self.bits.shape[1]:
            self.bits = np.hstack([self.bits, np.zeros_like(self.bits)])
        self.bits[js, i // 64] |= np.uint64(1 << (i % 64))
        self.sets.append(F)

    def solve(self):
        if self.exact:
            return solve_exact(HittingSetInstance(self.sets, lambda v: self.g.costs[v]))
        w = [self.g.costs[v] for v in self.cols]
        return frozenset(self.cols[j] for j in greedy_bitsets(self.bits, w))


def _run(g, S, exact, name, fewer_calls, max_hedges):
    started = time.perf_counter()
    S, comps, forced = target_structure(g, S)
    require_finite(g, forced)
    V = g.vertices
    hulls = _hulls(g, comps, V - forced)
    if _collapsed(comps, hulls):
        return make_report(g, name, forced, started)

    pool = _HedgePool(g, S, exact)
    calls = 0
    acc = frozenset()
    while True:
        while True:
            for comp, H in zip(comps, hulls):
                if len(H) == len(comp):
                    continue
                F, a = _discover(g, comp, H, S)
                pool.add(F)
                acc |= {a}
                if pool.found > max_hedges:
                    raise ResourceLimitError(
                        f"discovered more than {max_hedges} hedges; use a heuristic")
            if not fewer_calls:
                break
            # defer the hitting-set call until the removed vertices identify Q[S]
            hulls = _hulls(g, comps, V - acc - forced)
            if _collapsed(comps, hulls):
                break
        A = pool.solve()
        calls += 1
        hulls = _hulls(g, comps, V - A - forced)
        if _collapsed(comps, hulls):
            return make_report(g, name, A | forced, started,
                               hedges_discovered=pool.found, hitting_set_calls=calls)
        acc = A


def solve_exact_min_intervention(g, S, max_hedges=DEFAULT_MAX_HEDGES):
    """Optimal intervention set for Q[S] (exact hitting sets)."""
    return _run(g, S, True, "exact", False, max_hedges)


def solve_approx_min_intervention(g, S, max_hedges=DEFAULT_MAX_HEDGES):
    """Same discovery loop with greedy hitting sets: sound, log-factor approximate."""
    return _run(g, S, False, "approx", False, max_hedges)


def solve_exact_fewer_calls(g, S, max_hedges=DEFAULT_MAX_HEDGES):
    """Exact variant that keeps discovering hedges before each hitting-set call."""
    return _run(g, S, True, "fewer-calls", True, max_hedges)
