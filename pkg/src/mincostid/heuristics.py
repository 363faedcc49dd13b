"""Polynomial-time heuristics for the min-cost intervention problem.

All three return an identifying intervention set but carry no approximation
guarantee. Each starts from the forced parents and the hull H that remains
after removing them, then:

* ``heuristic1`` cuts every bidirected path from Pa(S) within H to S;
* ``heuristic2`` cuts every directed path from Bid(S) within H to S;
* ``heuristic_greedy`` removes, one at a time, the vertex that minimises its
  own cost plus the cost of the hull that would remain.

``post_process`` drops vertices that turn out to be unnecessary.
"""

import math
import time

from .errors import InfeasibleError, PreconditionError
from .exact import require_finite, target_structure
from .flow import CutProblem, min_vertex_cut
from .graph import INF, bid_neighbors, parents
from .identification import is_identifiable_after
from .report import make_report

_SRC, _SNK = "x", "y"


def _cut_weights(g, H, S):
    return {v: (INF if v in S else g.costs[v]) for v in H}


def _aux_bidirected(g, comp, H, S):
    edges = [(u, v) for u, v in g.bidirected if u in H and v in H]
    edges += [(_SRC, p) for p in sorted(parents(g, comp) & H)]
    edges += [(s, _SNK) for s in sorted(comp)]
    return CutProblem(_cut_weights(g, H, S), tuple(edges), _SRC, _SNK, directed=False)


def _aux_directed(g, comp, H, S):
    edges = [(u, v) for u, v in g.directed if u in H and v in H]
    edges += [(_SRC, b) for b in sorted(bid_neighbors(g, comp) & H)]
    edges += [(s, _SNK) for s in sorted(comp)]
    return CutProblem(_cut_weights(g, H, S), tuple(edges), _SRC, _SNK, directed=True)


def _cut_heuristic(g, S, build, name):
    started = time.perf_counter()
    S, comps, forced = target_structure(g, S)
    require_finite(g, forced)
    k = g.kernel
    A = set(forced)
    for comp in comps:
        H = k.hull(comp, g.vertices - A)
        if len(H) == len(comp):
            continue
        A |= min_vertex_cut(build(g, comp, H, S))
    return make_report(g, name, A, started)


def heuristic1(g, S):
    """Undirected min vertex cut over the bidirected edges of the hull."""
    return _cut_heuristic(g, S, _aux_bidirected, "heuristic1")


def heuristic2(g, S):
    """Directed min vertex cut over the directed edges of the hull."""
    return _cut_heuristic(g, S, _aux_directed, "heuristic2")


def _general_hull(k, comps, within):
    out = set()
    for c in comps:
        out |= k.hull(c, within)
    return frozenset(out)


def heuristic_greedy(g, S):
    """Greedy hull shrinking.

    Each step adds the vertex x minimising C(x) + C(H' minus S), where H' is
    the hull left after also removing x. Ties go to the lowest index and
    non-intervenable vertices are never candidates.
    """
    started = time.perf_counter()
    S, comps, forced = target_structure(g, S)
    k = g.kernel
    costs = g.costs
    require_finite(g, forced)
    A = set(forced)
    H = _general_hull(k, comps, g.vertices - A)
    while len(H) != len(S):
        best = best_f = best_h = None
        cands = sorted(v for v in H - S if not math.isinf(costs[v]))
        if not cands:
            raise InfeasibleError("a hedge remains whose vertices outside S are all non-intervenable")
        for v in cands:
            H2 = _general_hull(k, comps, H - {v})
            f = costs[v] + g.cost(H2 - S)
            if best is None or f < best_f:
                best, best_f, best_h = v, f, H2
        A.add(best)
        H = best_h
    return make_report(g, "greedy", A, started)


def choose_heuristic(g, S, density_factor=1.0):
    """Pick heuristic2 unless G[H] has more than ``density_factor`` times as
    many directed as bidirected edges, in which case heuristic1 is used."""
    S, comps, forced = target_structure(g, S)
    H = _general_hull(g.kernel, comps, g.vertices - forced)
    n_dir = sum(1 for u, v in g.directed if u in H and v in H)
    n_bid = sum(1 for u, v in g.bidirected if u in H and v in H)
    return heuristic1 if n_dir > density_factor * n_bid else heuristic2


def heuristic_auto(g, S, density_factor=1.0):
    rep = choose_heuristic(g, S, density_factor)(g, S)
    rep.algorithm = f"auto:{rep.algorithm}"
    return rep


def heuristic_best_of(g, S):
    """Run all three heuristics and keep the cheapest answer."""
    started = time.perf_counter()
    reps = [heuristic2(g, S), heuristic1(g, S), heuristic_greedy(g, S)]
    best = min(reps, key=lambda r: r.cost)
    return make_report(g, f"best-of:{best.algorithm}", best.intervention, started)


def post_process(g, S, A):
    """Drop unnecessary vertices from an identifying intervention A.

    Vertices are tried once each, most expensive first (ties: highest index);
    a vertex is dropped if Q[S] stays identifiable without it. Forced
    parents are never tried. Since removing vertices can only create
    hedges, a vertex kept once would be kept on any later pass too.
    """
    S, comps, forced = target_structure(g, S)
    A = set(g.vset(A))
    if not is_identifiable_after(g, S, A):
        raise PreconditionError("post_process needs an intervention that already identifies Q[S]")
    for a in sorted(A - forced, key=lambda v: (g.costs[v], v), reverse=True):
        if is_identifiable_after(g, S, A - {a}):
            A.discard(a)
    return frozenset(A)
