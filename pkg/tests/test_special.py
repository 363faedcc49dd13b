import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import admgs, random_instance, tree_instances, tree_like_graph, two_sided_graph
from mincostid import (CausalGraph, PreconditionError, is_identifiable_after,
                       solve_bounded_hedge2, solve_exact_min_intervention, solve_special_costs,
                       solve_tree)
from mincostid.identification import is_hedge
from mincostid.special import (bipartition, check_bipartite, conflict_graph, is_tree_like,
                               nec_closures, tree_hedges)


TREES = tree_instances(100)


@pytest.mark.parametrize("g", TREES, ids=range(len(TREES)))
def test_tree_solver_matches_exact(g):
    s = g.n - 1
    assert is_tree_like(g)
    rep = solve_tree(g, s)
    assert is_identifiable_after(g, [s], rep.intervention)
    assert rep.cost == solve_exact_min_intervention(g, [s]).cost
    nc, hedges = tree_hedges(g, s)
    for i, F in enumerate(hedges):
        assert is_hedge(g, [s], F)
        for G in hedges[i + 1:]:
            assert F & G == {s}


def test_closure_invariants():
    rng = np.random.default_rng(7)
    for _ in range(30):
        g = tree_like_graph(rng, 10, keep=0.95)
        nc = nec_closures(g, g.n - 1)
        for x, c in nc.closure.items():
            assert x in c
            assert all(nc.nec[y] <= c for y in c)
            if x != nc.s:
                assert is_hedge(g, [nc.s], c)


def test_tree_trivial_cases():
    g = CausalGraph(3, [(0, 1)], [])
    assert solve_tree(g, 2).intervention == frozenset()
    u_s = CausalGraph(2, [(0, 1)], [(0, 1)])
    assert solve_tree(u_s, 1).intervention == {0}


def test_tree_rejects_cycles_and_sets():
    g = CausalGraph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(PreconditionError, match="tree-like"):
        solve_tree(g, 2)
    with pytest.raises(PreconditionError):
        solve_tree(CausalGraph(3), [1, 2])


def test_bounded_hedge_single_edge():
    # b -> a -> s, b <-> s, a <-> b: the only hedge is {a, b, s}
    g = CausalGraph(3, [(1, 0), (0, 2)], [(1, 2), (0, 1)], costs=[1, 9, 1])
    assert conflict_graph(g, [2]) == [(0, 1)]
    assert solve_bounded_hedge2(g, [2]).intervention == {0}
    assert solve_bounded_hedge2(g.with_costs([9, 1, 1]), [2]).intervention == {1}


def test_bounded_hedge_no_conflicts_returns_pac():
    g = CausalGraph(3, [(0, 2), (1, 2)], [(0, 2)])
    assert solve_bounded_hedge2(g, [2]).intervention == {0}


def test_bounded_hedge_detects_large_hedges():
    # chain 0 -> 1 -> 2 -> 3 closed by 3 <-> 0 <-> 1 <-> 2: one minimal hedge with three extra vertices
    g = CausalGraph(4, [(0, 1), (1, 2), (2, 3)], [(0, 3), (0, 1), (1, 2)])
    with pytest.raises(PreconditionError, match="more than two"):
        solve_bounded_hedge2(g, [3])


@pytest.mark.parametrize("seed", range(60))
def test_bounded_hedge_on_two_sided_graphs(seed):
    rng = np.random.default_rng(seed)
    g = two_sided_graph(rng, int(rng.integers(1, 5)))
    assert check_bipartite(g, [0], conflict_graph(g, [0]))
    try:
        rep = solve_bounded_hedge2(g, [0])
    except PreconditionError:
        return
    assert rep.cost == solve_exact_min_intervention(g, [0]).cost


@pytest.mark.parametrize("seed", range(60))
def test_conflict_graph_is_bipartite_and_solver_exact(seed):
    g, S = random_instance(seed, 6 + seed % 7, p=0.3, q=0.3)
    edges = conflict_graph(g, S)
    assert check_bipartite(g, S, edges)
    left, right = bipartition(g, S)
    assert not left & right
    try:
        rep = solve_bounded_hedge2(g, S)
    except PreconditionError:
        return
    assert rep.cost == solve_exact_min_intervention(g, S).cost


@pytest.mark.parametrize("seed", range(60))
def test_special_costs_match_exact(seed):
    g, S = random_instance(seed, 4 + seed % 9)
    g = g.with_costs([2 ** (i + 1) for i in range(g.n)])
    rep = solve_special_costs(g, S)
    assert rep.cost == solve_exact_min_intervention(g, S).cost
    assert is_identifiable_after(g, S, rep.intervention)


def test_special_costs_trivial_and_guard():
    g = CausalGraph(3, [(0, 1), (1, 2)], costs=[1, 2, 4])
    assert solve_special_costs(g, [2]).intervention == frozenset()
    h = CausalGraph(3, [(0, 2), (1, 2)], [(0, 2), (1, 2)], costs=[1, 1, 1])
    with pytest.raises(PreconditionError, match="cost"):
        solve_special_costs(h, [2])


@given(admgs(max_n=8, costs=st.just(1)))
def test_special_costs_unique_under_relabelling(inst):
    g, S = inst
    g = g.with_costs([3 ** i for i in range(g.n)])
    assert solve_special_costs(g, S).intervention == solve_exact_min_intervention(g, S).intervention


def test_tree_with_two_disjoint_hedges():
    # s=0; a=1, b=2, c=3, d=4: a -> b -> s, c -> d -> s, s <-> a <-> b, s <-> c <-> d
    g = CausalGraph(5, [(1, 2), (2, 0), (3, 4), (4, 0)], [(0, 1), (1, 2), (0, 3), (3, 4)],
                    costs=[1, 3, 1, 2, 5])
    _, hedges = tree_hedges(g, 0)
    assert sorted(map(sorted, hedges)) == [[0, 1, 2], [0, 3, 4]]
    rep = solve_tree(g, 0)
    assert rep.intervention == {2, 3}
    assert rep.cost == solve_exact_min_intervention(g, [0]).cost == 3
