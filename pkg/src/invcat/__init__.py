"""Finite inverse categories, locally inductive groupoids, and the constructions between them."""

from .finstruct import (
    Arrow,
    FinCategory,
    FunctorData,
    StructureError,
    ValidationReport,
    hom_set,
    validate_category,
    validate_functor,
)
from .restriction import InverseCert, RestrictionData, certify_inverse_category, check_restriction_axioms
from .ogroupoid import OrderedGroupoid, SemilatticePartition, canonical_partition, classify, tensor
from .esn import InverseSemigroupTable, g_of_inverse_category, i_of_groupoid

__all__ = [
    "Arrow",
    "FinCategory",
    "FunctorData",
    "InverseCert",
    "InverseSemigroupTable",
    "OrderedGroupoid",
    "RestrictionData",
    "SemilatticePartition",
    "StructureError",
    "ValidationReport",
    "canonical_partition",
    "certify_inverse_category",
    "check_restriction_axioms",
    "classify",
    "g_of_inverse_category",
    "hom_set",
    "i_of_groupoid",
    "tensor",
    "validate_category",
    "validate_functor",
]
