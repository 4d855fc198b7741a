"""Exact topological recursion on rational spectral curves and dessin counts."""

from _irrec import (  # noqa: F401
    branch_classification,
    count_big_b,
    count_pruned,
    count_u,
    count_u_local,
    dessins_brute,
    epsilon_hz,
    f_bullet,
    invariant_string,
    invariant_taylor,
    one_point,
    suite_names,
    three_term_u,
    verify,
)

__all__ = [
    "branch_classification",
    "count_big_b",
    "count_pruned",
    "count_u",
    "count_u_local",
    "dessins_brute",
    "epsilon_hz",
    "f_bullet",
    "invariant_string",
    "invariant_taylor",
    "one_point",
    "suite_names",
    "three_term_u",
    "verify",
]
