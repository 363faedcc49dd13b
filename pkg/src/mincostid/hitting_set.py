"""Weighted minimum hitting set: exact branch and bound plus the greedy rule."""

import math

import numpy as np

from .errors import InfeasibleError, PreconditionError


class HittingSetInstance:
    """Sets over a universe of integer elements with per-element weights.

    ``weights`` maps element -> weight (``math.inf`` marks an element that
    may not be picked). Duplicate sets are dropped, empty sets rejected.
    """

    def __init__(self, sets, weights, universe=None):
        uniq = []
        seen = set()
        for s in sets:
            s = frozenset(s)
            if not s:
                raise PreconditionError("an empty set can never be hit")
            if s not in seen:
                seen.add(s)
                uniq.append(s)
        self.sets = tuple(uniq)
        covered = frozenset().union(*self.sets) if self.sets else frozenset()
        self.universe = covered if universe is None else frozenset(universe)
        if not covered <= self.universe:
            raise PreconditionError(f"sets use elements outside the universe: {sorted(covered - self.universe)}")
        if callable(weights):
            weights = {v: weights(v) for v in self.universe}
        elif not isinstance(weights, dict):
            weights = {v: weights[v] for v in self.universe}
        missing = self.universe - weights.keys()
        if missing:
            raise PreconditionError(f"no weight for elements {sorted(missing)}")
        for v in self.universe:
            if not weights[v] >= 0:
                raise PreconditionError(f"weight of {v} must be >= 0")
        self.weights = {v: weights[v] for v in self.universe}

    def weight(self, A):
        return sum((self.weights[a] for a in A), 0)

    def __repr__(self):
        return f"HittingSetInstance({len(self.sets)} sets over {len(self.universe)} elements)"


def is_hitting_set(inst, A):
    A = frozenset(A)
    return all(s & A for s in inst.sets)


def pack_columns(rows, ncols):
    """Column bitsets for ``rows`` (iterables of column indices): entry
    [j, i // 64] holds bit i % 64 when row i contains column j."""
    C = np.zeros((ncols, max(1, -(-len(rows) // 64))), dtype=np.uint64)
    for i, js in enumerate(rows):
        C[list(js), i // 64] |= np.uint64(1 << (i % 64))
    return C


def greedy_bitsets(C, w):
    """Greedy rule over packed column bitsets with finite weights ``w``.

    Returns the picked column indices in pick order. Every row must contain
    a column. Ratios are compared as floats; ties go to the lowest column.
    """
    w = np.asarray(w, dtype=float)
    alive = np.full(C.shape[1], np.iinfo(np.uint64).max, dtype=np.uint64)
    picked = []
    with np.errstate(divide="ignore", invalid="ignore"):
        while True:
            n = np.bitwise_count(C & alive).sum(axis=1)
            if not n.any():
                return picked
            ratio = np.where(n > 0, np.where(w > 0, n / w, np.inf), -1.0)
            best = int(np.argmax(ratio))
            picked.append(best)
            alive &= ~C[best]


def solve_greedy(inst):
    """Repeatedly take the element hitting the most remaining sets per unit weight.

    Ties go to the lowest element. Raises InfeasibleError when some set can
    only be hit by infinite-weight elements.
    """
    w = inst.weights
    order = sorted(v for v in inst.universe if not math.isinf(w[v]))
    col = {v: j for j, v in enumerate(order)}
    rows = []
    for s in inst.sets:
        js = [col[v] for v in s if v in col]
        if not js:
            raise InfeasibleError(f"set {sorted(s)} contains only infinite-weight elements")
        rows.append(js)
    C = pack_columns(rows, len(order))
    return frozenset(order[j] for j in greedy_bitsets(C, [w[v] for v in order]))


def solve_exact(inst):
    """Minimum-weight hitting set by depth-first branch and bound.

    Branching decides elements in increasing order, trying "take" before
    "skip", so solutions are met in lexicographic order and the first
    optimum found is the lexicographically smallest one. The bound adds,
    over a greedily chosen family of pairwise disjoint open sets, the
    cheapest still-allowed element of each.
    """
    if not inst.sets:
        return frozenset()
    elems = sorted(v for v in inst.universe if not math.isinf(inst.weights[v]))
    pos = {v: i for i, v in enumerate(elems)}
    wt = [inst.weights[v] for v in elems]
    masks = []
    for s in inst.sets:
        m = 0
        for v in s:
            if v in pos:
                m |= 1 << pos[v]
        if not m:
            raise InfeasibleError(f"set {sorted(s)} contains only infinite-weight elements")
        masks.append(m)
    # cheaper sets first tightens the packing bound
    masks.sort(key=lambda m: (bin(m).count("1"), m))

    def min_weight(m):
        best = math.inf
        while m:
            low = m & -m
            c = wt[low.bit_length() - 1]
            if c < best:
                best = c
            m ^= low
        return best

    greedy = solve_greedy(inst)
    best_cost = inst.weight(greedy)
    best_mask = None

    def bound(open_sets):
        used = 0
        total = 0
        for m in open_sets:
            if not m & used:
                used |= m
                total += min_weight(m)
        return total

    def dfs(chosen, banned, cost, open_sets):
        nonlocal best_cost, best_mask
        if not open_sets:
            if best_mask is None or cost < best_cost:
                best_cost, best_mask = cost, chosen
            return
        allowed = []
        for m in open_sets:
            a = m & ~banned
            if not a:
                return
            allowed.append(a)
        lb = cost + bound(allowed)
        if lb > best_cost or (best_mask is not None and lb >= best_cost):
            return
        union = 0
        for a in allowed:
            union |= a
        low = union & -union
        e = low.bit_length() - 1
        dfs(chosen | low, banned, cost + wt[e], [m for m in open_sets if not m & low])
        dfs(chosen, banned | low, cost, open_sets)

    dfs(0, 0, 0, masks)
    if best_mask is None:
        return greedy
    return frozenset(elems[i] for i in range(len(elems)) if best_mask >> i & 1)
