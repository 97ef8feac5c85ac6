"""Generic quantum group arithmetic over Q(v) for rank <= 2, its
specialization at roots of unity, and mechanical identity checks."""

from .algebra import Element, QuantumAlgebra
from .oracles import ShuffleOracle, kostant_count
from .plus import PlusPart
from .special import Specializer, generic_root, recipe_element
from .verify import (
    verify_appendix_braid,
    verify_braid,
    verify_nilpotency,
    verify_normality_commutators,
    verify_pbw,
    verify_serre,
    verify_skew_primitive,
)

__all__ = [
    "Element",
    "QuantumAlgebra",
    "ShuffleOracle",
    "kostant_count",
    "PlusPart",
    "Specializer",
    "generic_root",
    "recipe_element",
    "verify_appendix_braid",
    "verify_braid",
    "verify_nilpotency",
    "verify_normality_commutators",
    "verify_pbw",
    "verify_serre",
    "verify_skew_primitive",
]
