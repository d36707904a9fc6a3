"""kplanar: split a drawn graph into k planes with bounded per-edge crossings.

The package pairs the randomized vertex-partition construction with exact
brute-force oracles so that every certificate and every reported statistic
can be independently recounted.
"""

from .bounds import (HypothesisUnmet, LllInstance, RegimeParams, TailBoundInputs,
                     beta_threshold_irregular, beta_threshold_regular,
                     combined_feasibility_gap, crossing_lower_bound,
                     dependency_degree_bound, hoeffding_tail, kn_lower_bound,
                     lcr_lower_bound, lll_check, mcdiarmid_edge_tail,
                     overload_free_probability_bound)
from .decompose import (DecompositionReport, PlaneAssignment, VertexLabeling,
                        assign_planes, decompose_by_coloring, decompose_combined,
                        decompose_lcr, decompose_via_degree_partition,
                        degree_partition, sample_labeling, surviving_report)
from .generators import (GeneratorSpec, convex_kn, cylindrical_kn,
                         random_geometric_drawing, random_regularish)
from .geometry import DegenerateDrawingError
from .graph import (Drawing, Graph, IntersectionGraph, crossings_from_geometry,
                    dump_drawing_json, dump_edge_list, intersection_graph,
                    load_combinatorial_drawing, load_drawing_json, load_graph)
from .montecarlo import MonteCarloSummary, run_montecarlo
from .oracle import (ConditionalSurvival, OracleResult, ScopeReport,
                     dependency_scopes, exact_best_edge_partition,
                     exact_best_labeling, exact_conditional_survival,
                     exact_g_distribution, exact_survival_expectation,
                     exact_survival_variance)
from .svg import render_decomposition_svg, svg_recount, verify_svg
from .weights import WeightVector, minimax_weights_grid, optimal_weights, uniform_weights

__version__ = "0.1.0"
