"""Finite-dimensional representation theory of the small quantum algebra at rank <= 2."""

from .context import SmallContext, small_context
from .ext import ExtReport, ext1, is_injective, is_projective, linked_simple_labels
from .modules import (
    WeightModule,
    baby_verma,
    contravariant_dual,
    cosocle,
    hopf_dual,
    invariants_subspace,
    lift_grading,
    maximal_submodule,
    module_iso_test,
    reduce_grading,
    rind,
    simple,
    socle,
    steinberg_module,
    tensor_product,
    verma_top,
)
from .small_algebra import FiniteDimAlgebra, basis_labels, build_algebra
from .suites import restricted_simples_check, socle_cosocle_check, steinberg_suite

__all__ = [
    "SmallContext",
    "small_context",
    "ExtReport",
    "ext1",
    "is_injective",
    "is_projective",
    "linked_simple_labels",
    "WeightModule",
    "baby_verma",
    "contravariant_dual",
    "cosocle",
    "hopf_dual",
    "invariants_subspace",
    "lift_grading",
    "maximal_submodule",
    "module_iso_test",
    "reduce_grading",
    "rind",
    "simple",
    "socle",
    "steinberg_module",
    "tensor_product",
    "verma_top",
    "FiniteDimAlgebra",
    "basis_labels",
    "build_algebra",
    "restricted_simples_check",
    "socle_cosocle_check",
    "steinberg_suite",
]
