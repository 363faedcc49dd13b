"""Hedges, hedge hulls and the identifiability test for Q[S].

A hedge for a c-component S is a strict superset F of S such that every
vertex of F reaches S by directed edges inside F and F is bidirected-connected.
Q[S] is identifiable from Q[V minus A] exactly when no hedge survives in the
graph restricted to V minus A; equivalently the hedge hull collapses to S.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import PreconditionError, ResourceLimitError
from .graph import maximal_c_components


@dataclass(frozen=True)
class HedgeInstance:
    """A target S and a deduplicated list of hedges formed for it."""

    S: frozenset
    hedges: tuple

    def __len__(self):
        return len(self.hedges)

    def sets_to_hit(self):
        return [F - self.S for F in self.hedges]


def _require_c_component(g, S):
    if not S:
        raise PreconditionError("target set is empty")
    if g.kernel.component((min(S),), S) != S:
        raise PreconditionError(f"G[{sorted(S)}] is not a c-component")


def _prepare(g, S, within):
    S = g.vset(S)
    within = g.vertices if within is None else g.vset(within)
    if not S <= within:
        raise PreconditionError(f"target {sorted(S)} is not contained in the working set")
    return S, within


def is_hedge(g, S, F):
    """True iff F is a hedge formed for Q[S] (S must induce a c-component)."""
    S, F = _prepare(g, S, F)
    _require_c_component(g, S)
    if len(F) == len(S):
        return False
    k = g.kernel
    return k.ancestors(S, F) == F and k.component(S, F) == F


def hedge_hull(g, S, within=None):
    """Union of all hedges for Q[S] inside ``within``; equals S when none exists.

    Alternates "bidirected component of S" and "ancestors of S" until the
    working set stops shrinking.
    """
    S, within = _prepare(g, S, within)
    _require_c_component(g, S)
    return g.kernel.hull(S, within)


def hedge_hull_general(g, S, within=None):
    """Union of the hulls of the maximal c-components of G[S]."""
    S, within = _prepare(g, S, within)
    k = g.kernel
    out = set(S)
    for comp in maximal_c_components(g, S):
        out |= k.hull(comp, within)
    return frozenset(out)


def is_identifiable_after(g, S, A, strict=False):
    """Is Q[S] identifiable once the vertices in A are intervened on?

    Intervening inside S never helps, so an A that meets S gives False
    (or PreconditionError when ``strict``).
    """
    S, A = g.vset(S), g.vset(A)
    if A & S:
        if strict:
            raise PreconditionError(f"intervention meets the target at {sorted(A & S)}")
        return False
    within = g.vertices - A
    k = g.kernel
    for comp in maximal_c_components(g, S):
        if len(k.hull(comp, within)) != len(comp):
            return False
    return True


def enumerate_minimal_hedges(g, S, within=None, max_extra=None, max_subsets=2_000_000):
    """All minimal hedges F with at most ``max_extra`` vertices outside S.

    Candidate sets are scanned by increasing size and lexicographically
    within a size; supersets of hedges already found are skipped, so the
    first hit is always minimal.
    """
    S, within = _prepare(g, S, within)
    _require_c_component(g, S)
    k = g.kernel
    pool = sorted(k.hull(S, within) - S)
    if max_extra is None:
        max_extra = len(pool)
    max_extra = min(max_extra, len(pool))
    budget = sum(comb(len(pool), r) for r in range(1, max_extra + 1))
    if budget > max_subsets:
        raise ResourceLimitError(
            f"minimal-hedge enumeration would test {budget} subsets "
            f"(|hull \\ S| = {len(pool)}, max_extra = {max_extra}); limit is {max_subsets}")
    found = []
    for r in range(1, max_extra + 1):
        for extra in combinations(pool, r):
            ex = frozenset(extra)
            if any(h <= ex for h in found):
                continue
            F = S | ex
            if k.ancestors(S, F) == F and k.component(S, F) == F:
                found.append(ex)
    return HedgeInstance(S, tuple(S | ex for ex in found))


def enumerate_hedges(g, S, within=None, limit=1_000_000):
    """Every hedge for Q[S] inside ``within`` (not only minimal ones).

    Branches on the smallest undecided vertex of the current hull: hedges
    avoiding it live in the hull of the reduced set, the rest must contain
    it. Every branch that survives contains at least one hedge, so the
    work is proportional to the output.
    """
    S, within = _prepare(g, S, within)
    _require_c_component(g, S)
    k = g.kernel
    out = []

    def rec(w, forced):
        H = k.hull(S, w)
        if not forced <= H or len(H) == len(S):
            return
        free = H - S - forced
        if not free:
            out.append(H)
            if len(out) > limit:
                raise ResourceLimitError(f"more than {limit} hedges")
            return
        u = min(free)
        rec(H - {u}, forced)
        rec(H, forced | {u})

    rec(within, frozenset())
    return HedgeInstance(S, tuple(out))
