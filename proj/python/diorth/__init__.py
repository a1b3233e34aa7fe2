"""Exact orthogonality, path partitions and dicolorings on small digraphs."""

from ._core import (
    BudgetExceeded,
    Digraph,
    EdgeListError,
    PreconditionError,
    SolverLimit,
    all_digraphs,
    alpha_k,
    alpha_prime_k,
    analyze,
    chi_k,
    chi_prime_k,
    cycle_orientation,
    gnp_digraph,
    good_path_partition,
    greedy_dicoloring,
    is_acyclic,
    k_norm_of_classes,
    k_norm_of_partition,
    lambda_k,
    linial_dual,
    linial_primal,
    longest_path,
    max_induced_acyclic,
    max_stable_set,
    min_coloring,
    min_dicoloring,
    min_path_partition,
    orthogonal_partition_to_mas,
    orthogonal_path,
    pi_k,
    random_tournament,
    run_instance_suite,
    search_question,
    underlying_edges,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Digraph",
    "EdgeListError",
    "PreconditionError",
    "SolverLimit",
    "all_digraphs",
    "alpha_k",
    "alpha_prime_k",
    "analyze",
    "chi_k",
    "chi_prime_k",
    "cycle_orientation",
    "gnp_digraph",
    "good_path_partition",
    "greedy_dicoloring",
    "is_acyclic",
    "k_norm_of_classes",
    "k_norm_of_partition",
    "lambda_k",
    "linial_dual",
    "linial_primal",
    "longest_path",
    "max_induced_acyclic",
    "max_stable_set",
    "min_coloring",
    "min_dicoloring",
    "min_path_partition",
    "orthogonal_partition_to_mas",
    "orthogonal_path",
    "pi_k",
    "random_tournament",
    "run_instance_suite",
    "search_question",
    "underlying_edges",
    "verify_certificate",
]
