import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mincostid import InfeasibleError, PreconditionError
from mincostid.hitting_set import HittingSetInstance, is_hitting_set, solve_exact, solve_greedy
from oracles import bf_hitting_set, naive_greedy

families = st.lists(st.frozensets(st.integers(0, 9), min_size=1, max_size=4), max_size=8)
weight_maps = st.lists(st.integers(0, 6), min_size=10, max_size=10)


@given(families, weight_maps)
def test_exact_matches_brute_force(sets, w):
    inst = HittingSetInstance(sets, w, universe=range(10))
    A = solve_exact(inst)
    assert is_hitting_set(inst, A)
    assert inst.weight(A) == bf_hitting_set([set(s) for s in inst.sets], w)


@given(families, weight_maps)
def test_greedy_hits_everything_and_is_no_better_than_optimum(sets, w):
    inst = HittingSetInstance(sets, w, universe=range(10))
    A = solve_greedy(inst)
    assert is_hitting_set(inst, A)
    assert inst.weight(A) >= inst.weight(solve_exact(inst))


@given(families, weight_maps)
def test_greedy_within_harmonic_factor(sets, w):
    w = [x + 1 for x in w]
    inst = HittingSetInstance(sets, w, universe=range(10))
    d = max((sum(1 for s in inst.sets if v in s) for v in range(10)), default=0)
    h = sum(1 / i for i in range(1, d + 1))
    assert inst.weight(solve_greedy(inst)) <= h * inst.weight(solve_exact(inst)) + 1e-9


@given(st.lists(st.frozensets(st.integers(0, 11), min_size=1, max_size=5), max_size=150),
       st.lists(st.integers(0, 6), min_size=12, max_size=12))
def test_packed_greedy_matches_naive_rule(sets, w):
    # more than 64 sets exercises the multi-word bitsets
    inst = HittingSetInstance(sets, w, universe=range(12))
    assert solve_greedy(inst) == frozenset(naive_greedy(inst.sets, w))


def test_greedy_prefers_high_coverage_per_weight():
    inst = HittingSetInstance([{0, 1}, {0, 2}, {0, 3}], {0: 2, 1: 1, 2: 1, 3: 1})
    assert solve_greedy(inst) == {0}


def test_ties_go_to_the_lowest_element():
    inst = HittingSetInstance([{3, 1}, {2, 4}], lambda v: 1)
    assert solve_exact(inst) == {1, 2}
    assert solve_greedy(inst) == {1, 2}


def test_exact_example():
    inst = HittingSetInstance([{0, 1}, {1, 2}, {2, 3}], {0: 1, 1: 3, 2: 1, 3: 5})
    assert solve_exact(inst) == {0, 2}


def test_infinite_elements_are_never_chosen():
    inst = HittingSetInstance([{0, 1}, {1, 2}], {0: 1, 1: math.inf, 2: 1})
    assert solve_exact(inst) == {0, 2}
    assert solve_greedy(inst) == {0, 2}
    bad = HittingSetInstance([{0}], {0: math.inf})
    with pytest.raises(InfeasibleError):
        solve_exact(bad)
    with pytest.raises(InfeasibleError):
        solve_greedy(bad)


def test_validation():
    with pytest.raises(PreconditionError):
        HittingSetInstance([set()], {})
    with pytest.raises(PreconditionError):
        HittingSetInstance([{0}], {0: -1})
    with pytest.raises(PreconditionError):
        HittingSetInstance([{0}], {1: 1})
    assert solve_exact(HittingSetInstance([], {})) == frozenset()
    assert len(HittingSetInstance([{0}, {0}], {0: 1}).sets) == 1
