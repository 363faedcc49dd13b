"""Minimum-cost intervention design for identifying Q[S] in semi-Markovian graphs."""

from ._kernel import backend, set_backend
from .bench import (ExperimentConfig, RegretRecord, count_hedges_vs_discovered,
                    gen_erdos_renyi_admg, reduce_wmvc, run_regret_experiment)
from .errors import (GraphError, InfeasibleError, MinCostIDError, PreconditionError,
                     ResourceLimitError)
from .exact import (solve_approx_min_intervention, solve_exact_fewer_calls,
                    solve_exact_min_intervention)
from .flow import CutProblem, max_flow_value, min_vertex_cut
from .general import enumerate_set_partitions, solve_general, solve_singleton_infinite_s
from .graph import (INF, CausalGraph, ancestors, bid_neighbors, c_component_of, load_graph,
                    maximal_c_components, pac, parents, save_graph)
from .heuristics import (heuristic1, heuristic2, heuristic_auto, heuristic_best_of,
                         heuristic_greedy, post_process)
from .hitting_set import HittingSetInstance, solve_exact as solve_hitting_set_exact
from .hitting_set import solve_greedy as solve_hitting_set_greedy
from .identification import (enumerate_hedges, enumerate_minimal_hedges, hedge_hull,
                             hedge_hull_general, is_hedge, is_identifiable_after)
from .report import InterventionCollection, SolveReport
from .special import solve_bounded_hedge2, solve_special_costs, solve_tree

__version__ = "0.1.0"
