import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import make_pair_graph
from mincostid import is_identifiable_after, solve_exact_min_intervention
from mincostid.bench import (CSV_COLUMNS, HEDGE_COLUMNS, ExperimentConfig, bootstrap_ci,
                             choose_target, count_hedges_vs_discovered, gen_erdos_renyi_admg,
                             hedge_counts, intervention_to_cover, make_instance, reduce_wmvc,
                             regret, run_regret_experiment, summarize, trial_seeds, write_csv)
from mincostid.graph import is_c_component
from oracles import bf_vertex_cover


def test_generator_extremes():
    g = gen_erdos_renyi_admg(5, 0, 0, seed=1)
    assert not g.directed and not g.bidirected
    h = gen_erdos_renyi_admg(3, 1, 1, seed=1)
    assert h.directed == {(0, 1), (0, 2), (1, 2)} == h.bidirected


def test_generator_is_deterministic_and_ordered():
    a = gen_erdos_renyi_admg(30, 0.35, 0.25, seed=11)
    b = gen_erdos_renyi_admg(30, 0.35, 0.25, seed=11)
    assert a == b and len(a.directed) == len(b.directed)
    assert all(u < v for u, v in a.directed)
    assert set(a.costs) <= {1, 2, 3, 4}


def test_target_comes_from_the_tail_and_is_a_c_component():
    cfg = ExperimentConfig(n=40, s_fraction=0.1)
    for seed in trial_seeds(ExperimentConfig(trials=20)):
        g, S = make_instance(cfg, seed)
        assert S and min(S) >= 36 and is_c_component(g, S)


def test_choose_target_gives_up():
    g = gen_erdos_renyi_admg(4, 0, 0, seed=0)
    rng = np.random.default_rng(0)
    S = choose_target(g, rng, fraction=1.0, max_tries=5)
    assert S is None or len(S) == 1


def test_trial_seeds_are_stable():
    cfg = ExperimentConfig(trials=3, seed=42)
    assert trial_seeds(cfg) == trial_seeds(cfg)
    assert len(set(trial_seeds(cfg))) == 3


def test_config_validation():
    for bad in ({"p": 2}, {"trials": 0}, {"roster": ("nope",)}, {"roster": ()}):
        with pytest.raises(ValueError):
            ExperimentConfig(**bad)


def test_gadget_for_a_single_edge():
    g, s = reduce_wmvc(2, [(0, 1)])
    assert g.n == 5 and g.names == ("h0", "h1", "u_0_1", "w_0_1", "s")
    assert g.directed == {(2, 0), (0, 1), (1, 3), (3, 4)}
    assert g.bidirected == {(0, 2), (1, 2), (2, 3), (2, 4)}
    assert g.costs == (1, 1, 3, 3, 3)


def test_edgeless_gadget_is_identifiable():
    g, s = reduce_wmvc(3, [])
    assert is_identifiable_after(g, [s], [])


@st.composite
def weighted_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [e for e in pairs if draw(st.booleans())]
    return n, edges, [draw(st.integers(1, 6)) for _ in range(n)]


@given(weighted_graphs())
def test_reduction_preserves_optimum(h):
    n, edges, w = h
    g, s = reduce_wmvc(n, edges, w)
    rep = solve_exact_min_intervention(g, [s])
    assert rep.cost == bf_vertex_cover(n, edges, w)
    assert rep.intervention <= set(range(n))


@given(weighted_graphs(max_n=6))
def test_unit_cost_reduction_maps_back_to_a_cover(h):
    n, edges, _ = h
    g, s = reduce_wmvc(n, edges, unit=True)
    A = solve_exact_min_intervention(g, [s]).intervention
    cover = intervention_to_cover(n, edges, A)
    assert all(x in cover or y in cover for x, y in edges)
    assert len(cover) == len(A) == bf_vertex_cover(n, edges, [1] * n)


def test_regret_definition():
    assert regret(6, 4) == 0.5
    assert regret(0, 0) == 0
    assert math.isinf(regret(1, 0))
    assert math.isnan(regret(math.nan, 3))


def test_exact_only_roster_has_zero_regret():
    rows = run_regret_experiment(ExperimentConfig(n=12, trials=10, roster=("exact",)))
    assert len(rows) == 10 and all(r.regret == 0 for r in rows)


def test_csv_bytes_are_reproducible():
    cfg = ExperimentConfig(n=10, trials=40, seed=5, record_time=False)
    a = write_csv(run_regret_experiment(cfg), CSV_COLUMNS)
    b = write_csv(run_regret_experiment(cfg), CSV_COLUMNS)
    assert a == b
    assert a.splitlines()[0] == ",".join(CSV_COLUMNS)
    assert len(a.splitlines()) == 1 + 40 * len(cfg.roster)


def test_parallel_run_matches_serial():
    cfg = ExperimentConfig(n=10, trials=6, seed=9, record_time=False)
    assert (write_csv(run_regret_experiment(cfg, jobs=2), CSV_COLUMNS)
            == write_csv(run_regret_experiment(cfg), CSV_COLUMNS))


def test_summary_and_bootstrap():
    lo, hi = bootstrap_ci([1.0] * 10)
    assert lo == hi == 1.0
    lo, hi = bootstrap_ci(list(range(20)))
    assert lo < 9.5 < hi
    assert all(math.isnan(x) for x in bootstrap_ci([]))
    rows = run_regret_experiment(ExperimentConfig(n=12, trials=8))
    s = summarize(rows)
    assert set(s) == set(ExperimentConfig().roster)
    assert s["exact"]["mean_regret"] == 0 and s["exact"]["completed"] == 8


def test_hedge_counts_on_pair_graph():
    g = make_pair_graph()
    in_graph, after_pac = hedge_counts(g, [0, 1])
    assert in_graph == 2 and after_pac == 0
    assert solve_exact_min_intervention(g, [0, 1]).hedges_discovered <= in_graph


def test_hedge_count_experiment():
    rows = count_hedges_vs_discovered(ExperimentConfig(n=12, trials=10))
    assert len(rows) == 10
    assert all(r.hedges_discovered <= r.total_hedges <= r.hedges_in_graph for r in rows)
    text = write_csv(rows, HEDGE_COLUMNS)
    assert text.splitlines()[0] == ",".join(HEDGE_COLUMNS)
