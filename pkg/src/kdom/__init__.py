"""k-dominating sets in directed graphs.

Small k-dominating sets via greedy and probabilistically seeded randomized
heuristics, with an exact branch-and-bound solver and LP export for
baselines, a seeded random-digraph generator, and a builder that derives
reachability digraphs from arc-weighted road networks.
"""
from .bench import VerificationError, run_bench, run_heuristic, verify_report
from .coverage import CoverageState, is_k_dominating, is_minimal_k_dominating
from .digraph import DegreeStats, Digraph, build_digraph, in_degree_stats, reverse
from .exact import ExactResult, IlpModel, LpSummary, build_ilp_model, exact_gamma_k, export_lp
from .generate import ErConfig, generate_er
from .greedy import (GreedyConfig, basic_greedy, deficiency_coverage_greedy,
                     importance_table, minimal_subset, two_criteria_greedy)
from .io import ParseError, read_digraph, read_weighted, write_digraph
from .randomized import (ProbabilityParam, RandomizedConfig,
                         domination_number_upper_bound, inclusion_probability,
                         randomized_solve, resolve_parameter)
from .reachability import (ReachabilityParams, WeightedRoadNetwork, bounded_sssp,
                           build_reachability)
from .report import CSV_HEADER, SolveReport

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER", "CoverageState", "DegreeStats", "Digraph", "ErConfig",
    "ExactResult", "GreedyConfig", "IlpModel", "LpSummary", "ParseError",
    "ProbabilityParam", "RandomizedConfig", "ReachabilityParams", "SolveReport",
    "VerificationError", "WeightedRoadNetwork", "basic_greedy", "bounded_sssp",
    "build_digraph", "build_ilp_model", "build_reachability",
    "deficiency_coverage_greedy", "domination_number_upper_bound",
    "exact_gamma_k", "export_lp", "generate_er", "importance_table",
    "in_degree_stats", "inclusion_probability", "is_k_dominating",
    "is_minimal_k_dominating", "minimal_subset", "randomized_solve",
    "read_digraph", "read_weighted", "resolve_parameter", "reverse",
    "run_bench", "run_heuristic", "two_criteria_greedy", "verify_report",
    "write_digraph",
]
