"""Finite type systems on Cantor space and their stabilizers in Thompson's group V."""

from ._vtypes import (
    Address,
    Element,
    TypeSystem,
    VTypesError,
    census_counts,
    class_permutation,
    classify,
    family_witness,
    in_fix,
    in_stab,
    is_simple,
    reduce,
    semigroup,
    stype_equal,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "Address",
    "Element",
    "TypeSystem",
    "VTypesError",
    "census_counts",
    "class_permutation",
    "classify",
    "family_witness",
    "in_fix",
    "in_stab",
    "is_simple",
    "reduce",
    "semigroup",
    "stype_equal",
    "witness",
]
