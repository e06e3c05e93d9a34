from hurwitz.services.permcore import (
    ClassTable,
    Permutation,
    PermutationGroup,
    build_group,
    conjugacy_classes,
    parse_cycles,
)
from hurwitz.services.braidcore import ClassSubset, Component, GTuple, Multidiscriminant
from hurwitz.services.galois import RationalityContext, make_context
from hurwitz.services.lifting import LiftingInvariant, SchurCover, build_schur_cover
from hurwitz.services.monoid import MonoidService, NiQuery

__all__ = [
    "ClassTable",
    "Permutation",
    "PermutationGroup",
    "build_group",
    "conjugacy_classes",
    "parse_cycles",
    "ClassSubset",
    "Component",
    "GTuple",
    "Multidiscriminant",
    "RationalityContext",
    "make_context",
    "LiftingInvariant",
    "SchurCover",
    "build_schur_cover",
    "MonoidService",
    "NiQuery",
]
