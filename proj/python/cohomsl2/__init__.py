"""Coboundary solvers for diagonal actions on products of SL(2,R)
representations: representation parameters, invariant distributions, the
one-factor and top-degree solvers, the kernel splitting, differential-form
primitives, and the quantitative verification suites."""

from ._core import (
    CoeffTensor,
    CohomError,
    IrrepParams,
    Series,
    apply_X,
    b_minus,
    b_plus,
    basis_norm_sq,
    beta,
    classify,
    complementary,
    d_value,
    difference_rhs_check,
    first_discrete,
    first_principal,
    form_from_json,
    form_to_json,
    green,
    kernel_defect,
    lemma_suites,
    norm0,
    pi_product,
    project,
    residual,
    second_discrete,
    second_principal,
    sobolev_index,
    sobolev_norm,
    solve_1d,
    solve_primitive_json,
    solve_top,
    split,
    verify_lemma,
    verify_split_kernels,
)

__all__ = [
    "CoeffTensor",
    "CohomError",
    "IrrepParams",
    "Series",
    "apply_X",
    "b_minus",
    "b_plus",
    "basis_norm_sq",
    "beta",
    "classify",
    "complementary",
    "d_value",
    "difference_rhs_check",
    "first_discrete",
    "first_principal",
    "form_from_json",
    "form_to_json",
    "green",
    "kernel_defect",
    "lemma_suites",
    "norm0",
    "pi_product",
    "project",
    "residual",
    "second_discrete",
    "second_principal",
    "sobolev_index",
    "sobolev_norm",
    "solve_1d",
    "solve_primitive_json",
    "solve_top",
    "split",
    "verify_lemma",
    "verify_split_kernels",
]

__version__ = "0.1.0"
