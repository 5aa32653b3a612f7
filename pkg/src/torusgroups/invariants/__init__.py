"""Decidable invariants of finitely presented groups."""

from .abelian import AbelianInvariants, abelianization, smith_diagonal
from .coset import DEFAULT_LIMIT, CosetOverflow, group_order, todd_coxeter
from .groups import BATTERY_NAMES, FiniteGroupTable, battery, group_by_name
from .homs import epi_exists, hom_count, hom_search, spectrum
from .z2z3 import Z2Z3Word, rb3_presentation, rb3_verify

__all__ = [
    "AbelianInvariants",
    "abelianization",
    "smith_diagonal",
    "DEFAULT_LIMIT",
    "CosetOverflow",
    "group_order",
    "todd_coxeter",
    "BATTERY_NAMES",
    "FiniteGroupTable",
    "battery",
    "group_by_name",
    "epi_exists",
    "hom_count",
    "hom_search",
    "spectrum",
    "Z2Z3Word",
    "rb3_presentation",
    "rb3_verify",
]
