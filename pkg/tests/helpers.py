"""Shared graph fixtures and hypothesis strategies."""

import numpy as np
from hypothesis import strategies as st

from mincostid import CausalGraph, bench
from mincostid.graph import maximal_c_components
from mincostid.special import tree_hedges
from oracles import graph_from_names

PAIR_NAMES = ["s1", "s2", "x", "v1", "v2", "v3"]
TRIPLE_NAMES = ["s1", "s2", "s3", "v1", "v2", "v3", "v4"]


def make_pair_graph():
    return graph_from_names(
        PAIR_NAMES,
        [("s1", "s2"), ("s2", "x"), ("v3", "x"), ("v1", "v2"), ("v2", "s1")],
        [("s1", "s2"), ("v1", "x"), ("v1", "s2"), ("s1", "x"), ("v2", "s2"), ("v3", "x")],
    )


def make_triple_graph():
    return graph_from_names(
        TRIPLE_NAMES,
        [("s1", "s2"), ("s2", "s3"), ("v4", "v3"), ("v3", "s2"), ("v1", "v2"), ("v2", "s1")],
        [("v3", "s3"), ("v4", "s3"), ("v4", "s2"), ("s1", "s3"), ("v2", "s2"),
         ("v1", "s2"), ("v1", "s1")],
        costs=[1, 1, 1, 5, 5, 5, 5],
    )


def random_instance(seed, n, p=0.35, q=0.25, s_fraction=0.25, costs=(1, 2, 3, 4)):
    cfg = bench.ExperimentConfig(n=n, p=p, q=q, s_fraction=s_fraction, costs=costs, trials=1)
    return bench.make_instance(cfg, seed)


@st.composite
def admgs(draw, min_n=2, max_n=7, costs=st.integers(1, 4), c_component=True):
    """Small random ADMG in topological index order with a target among the last vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    d = [e for e in pairs if draw(st.booleans())]
    b = [e for e in pairs if draw(st.booleans())]
    g = CausalGraph(n, d, b, costs=[draw(costs) for _ in range(n)])
    k = draw(st.integers(1, max(1, n // 3)))
    S = frozenset(range(n - k, n))
    if c_component:
        S = maximal_c_components(g, S)[-1]
    return g, S


def tree_like_graph(rng, n, keep=0.8):
    """Random ADMG whose directed skeleton and bidirected graph are both forests.

    Both forests grow from n-1, so most vertices are ancestors of the last
    vertex and bidirected-connected to it.
    """
    directed = [(i, int(rng.integers(i + 1, n))) for i in range(n - 1) if rng.random() < keep]
    perm = np.concatenate(([n - 1], rng.permutation(n - 1)))
    bidirected = [(int(perm[int(rng.integers(0, i))]), int(perm[i]))
                  for i in range(1, n) if rng.random() < keep]
    costs = rng.integers(1, 5, size=n).tolist()
    return CausalGraph(n, directed, bidirected, costs=costs)


def tree_instances(count, seed=0):
    """Tree-like graphs with n <= 12; most draws have no hedge once PaC is
    removed, so such draws are kept only one time in twenty."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        g = tree_like_graph(rng, int(rng.integers(3, 13)))
        if tree_hedges(g, g.n - 1)[1] or rng.random() < 0.05:
            out.append(g)
    return out


def two_sided_graph(rng, k):
    """Target s = 0 with parents L and bidirected neighbours R, plus random
    r -> l arcs and r <-> l edges between the sides; most minimal hedges are
    pairs {l, r}."""
    L = list(range(1, k + 1))
    R = list(range(k + 1, 2 * k + 1))
    directed = [(l, 0) for l in L] + [(r, l) for r in R for l in L if rng.random() < 0.5]
    bidirected = [(r, 0) for r in R] + [(r, l) for r in R for l in L if rng.random() < 0.5]
    costs = rng.integers(1, 6, size=2 * k + 1).tolist()
    return CausalGraph(2 * k + 1, directed, bidirected, costs=costs)
