"""Restricted common superstring / supersequence toolkit."""

from ._rcsolve import (
    Instance,
    alg1_bound,
    atsp01_to_rcsstr2,
    binary_scs,
    clique_to_rcsstr,
    digraph_to_rcsseq2,
    estimate_expected_score,
    greedy_concat,
    max_acyclic_subgraph,
    max_clique,
    random_arrangement,
    random_instance,
    score,
    solve_exact,
    solve_rcsseq2,
    solve_rcsstr2_set,
    tight_example,
    validate,
)

__all__ = [
    "Instance",
    "alg1_bound",
    "atsp01_to_rcsstr2",
    "binary_scs",
    "clique_to_rcsstr",
    "digraph_to_rcsseq2",
    "estimate_expected_score",
    "greedy_concat",
    "max_acyclic_subgraph",
    "max_clique",
    "random_arrangement",
    "random_instance",
    "score",
    "solve_exact",
    "solve_rcsseq2",
    "solve_rcsstr2_set",
    "tight_example",
    "validate",
]
