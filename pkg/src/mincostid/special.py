"""Polynomial solvers for three restricted families of instances.

* ``solve_tree``: directed skeleton and bidirected graph are both forests,
  target is a single vertex.
* ``solve_bounded_hedge2``: every minimal hedge adds at most two vertices to S.
* ``solve_special_costs``: sorted ancestor costs satisfy
  C(v_1) + ... + C(v_i) < C(v_{i+1}).
"""

import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .exact import target_structure
from .flow import CutProblem, min_vertex_cut
from .graph import ancestors, bid_neighbors, parents
from .identification import enumerate_minimal_hedges, is_identifiable_after
from .report import make_report

_SRC, _SNK = "x", "y"


def _is_forest(n, edges):
    root = list(range(n))

    def find(v):
        while root[v] != v:
            root[v] = root[root[v]]
            v = root[v]
        return v

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        root[a] = b
    return True


def is_tree_like(g):
    """Both the undirected skeleton of the directed edges and the bidirected graph are forests."""
    skeleton = {(min(u, v), max(u, v)) for u, v in g.directed}
    return (len(skeleton) == len(g.directed) and _is_forest(g.n, skeleton)
            and _is_forest(g.n, g.bidirected))


def _next_hop(s, H, nbrs):
    """BFS from s inside H; maps each reached vertex to its neighbour one step closer to s."""
    nxt = {s: None}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in nbrs(u):
            if w in H and w not in nxt:
                nxt[w] = u
                q.append(w)
    return nxt


def _path(x, nxt):
    out = []
    if x in nxt:
        while x is not None:
            out.append(x)
            x = nxt[x]
    return out


@dataclass(frozen=True)
class NecClosure:
    """Necessary sets nec_s(x) and their minimum closures NC_s(x) for x in the hull."""

    s: int
    hull: frozenset
    nec: dict
    closure: dict


def _single(g, s):
    if isinstance(s, int) and not isinstance(s, bool):
        return s
    S = g.vset(s)
    if len(S) != 1:
        raise PreconditionError("the tree solver takes a single target vertex")
    return next(iter(S))


def nec_closures(g, s):
    """nec_s(x) joins the unique bidirected path and the unique directed path
    from x to s inside H = hull(s) computed without PaC(s)."""
    s = _single(g, s)
    if not is_tree_like(g):
        raise PreconditionError("graph is not tree-like; use the exact or general solver")
    S, _, forced = target_structure(g, [s])
    H = g.kernel.hull(S, g.vertices - forced)
    bid = _next_hop(s, H, g.bid_of)
    down = _next_hop(s, H, g.pa_of)  # walks parent links back from s
    nec = {x: frozenset(_path(x, bid)) | frozenset(_path(x, down)) for x in sorted(H)}
    closure = {}
    for x in nec:
        c = {x}
        todo = [x]
        while todo:
            for z in nec[todo.pop()] - c:
                c.add(z)
                todo.append(z)
        closure[x] = frozenset(c)
    return NecClosure(s, H, nec, closure)


def tree_hedges(g, s):
    """The inclusion-minimal necessary closures; pairwise they share only s."""
    nc = nec_closures(g, s)
    cands = sorted({c for x, c in nc.closure.items() if x != nc.s}, key=lambda c: (len(c), sorted(c)))
    kept = []
    for c in cands:
        if not any(k <= c for k in kept):
            kept.append(c)
    return nc, kept


def solve_tree(g, s):
    """Optimal intervention for Q[{s}] on a tree-like graph.

    The retained hedges are disjoint apart from s, so the optimum picks the
    cheapest non-target vertex of each (ties: lowest index).
    """
    started = time.perf_counter()
    s = _single(g, s)
    _, _, forced = target_structure(g, [s])
    nc, hedges = tree_hedges(g, s)
    A = set(forced)
    for F in hedges:
        A.add(min(F - {nc.s}, key=lambda v: (g.costs[v], v)))
    return make_report(g, "tree", A, started, hedges_discovered=len(hedges))


def conflict_graph(g, S):
    """Edges {a, b} outside S and PaC(S) such that {a, b} with S forms a hedge."""
    S, comps, forced = target_structure(g, S)
    if len(comps) != 1:
        raise PreconditionError("the bounded-hedge solver needs G[S] to be a c-component")
    k = g.kernel
    pool = sorted(k.hull(S, g.vertices - forced) - S)
    edges = []
    for a, b in combinations(pool, 2):
        F = S | {a, b}
        if k.ancestors(S, F) == F and k.component(S, F) == F:
            edges.append((a, b))
    return edges


def bipartition(g, S):
    """The two sides every conflict edge must join: Pa(S) minus Bid(S), Bid(S) minus Pa(S)."""
    S = g.vset(S)
    pa, bid = parents(g, S), bid_neighbors(g, S)
    return pa - bid, bid - pa


def check_bipartite(g, S, edges):
    left, right = bipartition(g, S)
    return all((a in left and b in right) or (a in right and b in left) for a, b in edges)


def solve_bounded_hedge2(g, S, check=True):
    """Optimal intervention when every minimal hedge has at most two vertices outside S.

    The hedges of size two form a bipartite conflict graph whose minimum-weight
    vertex cover, found by a max-flow cut, is the answer together with PaC(S).
    With ``check`` the size bound is tested on minimal hedges of up to three
    extra vertices before solving.
    """
    started = time.perf_counter()
    S, _, forced = target_structure(g, S)
    edges = conflict_graph(g, S)
    if check:
        big = [F for F in enumerate_minimal_hedges(g, S, g.vertices - forced, max_extra=3).hedges
               if len(F) - len(S) > 2]
        if big:
            raise PreconditionError(
                f"minimal hedge {sorted(big[0])} has more than two vertices outside S")
    if not check_bipartite(g, S, edges):
        raise PreconditionError("conflict graph does not split along Pa(S) and Bid(S)")
    A = set(forced)
    if edges:
        left, right = bipartition(g, S)
        used = {v for e in edges for v in e}
        arcs = [(_SRC, v) for v in sorted(used & left)]
        arcs += [(a, b) if a in left else (b, a) for a, b in edges]
        arcs += [(v, _SNK) for v in sorted(used & right)]
        A |= min_vertex_cut(CutProblem({v: g.costs[v] for v in used}, tuple(arcs), _SRC, _SNK))
    if not is_identifiable_after(g, S, A):
        raise PreconditionError("a minimal hedge with more than two extra vertices survives the cover")
    return make_report(g, "bounded-hedge2", A, started, hedges_discovered=len(edges))


def check_special_costs(g, S):
    """Ancestors of S (outside S) sorted by cost, validated for prefix dominance."""
    S = g.vset(S)
    order = sorted(ancestors(g, S) - S, key=lambda v: (g.costs[v], v))
    total = 0
    for i, v in enumerate(order):
        if i and not total < g.costs[v]:
            raise PreconditionError(
                f"cost of {g.name(v)} does not exceed the total cost of all cheaper ancestors")
        total += g.costs[v]
    return order


def solve_special_costs(g, S):
    """Unique optimal intervention when every ancestor outweighs all cheaper ones together.

    Repeatedly scan the cost-sorted ancestors, adding them to the current set
    until it identifies Q[S]; the vertex that completed the scan belongs to
    every optimum and is locked in.
    """
    started = time.perf_counter()
    S, _, _ = target_structure(g, S)
    order = check_special_costs(g, S)
    I = set()
    while not is_identifiable_after(g, S, I):
        trial = set(I)
        for v in order:
            trial.add(v)
            if is_identifiable_after(g, S, trial):
                I.add(v)
                break
        else:
            raise PreconditionError("intervening on every ancestor does not identify Q[S]")
    return make_report(g, "special-costs", I, started)
