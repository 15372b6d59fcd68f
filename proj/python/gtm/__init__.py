"""Generalized Thue-Morse words: subword counting, binomial equivalence,
desubstitution, abelian Rauzy graphs, and closed-form complexities."""

from ._gtm import (
    abelian_complexity,
    abelian_count_formula,
    binary_kbinomial_formula,
    block_kbinomial_formula,
    build_graph,
    class_partition,
    count_pair_classes,
    edge_count,
    enumerate_factorizations,
    equivalent,
    equivalent_pairs,
    eulerian_check,
    export_dot,
    extension_pair_formula,
    factor_complexity,
    factor_count_formula,
    kbinomial_complexity,
    kbinomial_formula,
    order2_kbinomial_formula,
    pair_class_formula,
    ps_pair,
    rauzy_edge_formula,
    run_suite,
    shift_isomorphism_check,
    shortest_equivalent_pair,
    signature,
    subword_count,
    tm_prefix,
    unique_factorization,
    y_counts,
)

__all__ = [
    "abelian_complexity",
    "abelian_count_formula",
    "binary_kbinomial_formula",
    "block_kbinomial_formula",
    "build_graph",
    "class_partition",
    "count_pair_classes",
    "edge_count",
    "enumerate_factorizations",
    "equivalent",
    "equivalent_pairs",
    "eulerian_check",
    "export_dot",
    "extension_pair_formula",
    "factor_complexity",
    "factor_count_formula",
    "kbinomial_complexity",
    "kbinomial_formula",
    "order2_kbinomial_formula",
    "pair_class_formula",
    "ps_pair",
    "rauzy_edge_formula",
    "run_suite",
    "shift_isomorphism_check",
    "shortest_equivalent_pair",
    "signature",
    "subword_count",
    "tm_prefix",
    "unique_factorization",
    "y_counts",
]
