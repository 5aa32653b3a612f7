"""Exact curve/section geometry over Q and simple number fields."""

from .curves import (
    IDENTITIES,
    SectionCoeffs,
    SectionError,
    f1,
    f2,
    l_poly,
    multiplicity_at,
    restrict_to_section,
    verify_identity,
)
from .families import (
    CBRT4_FIELD,
    FAMILIES,
    ExclusionError,
    FamilyReport,
    sample_family,
    verify_family,
    x_t,
    y_t,
)
from .numberfield import QQ, FieldElement, NumberField, parse_element, parse_minpoly
from .poly import BivariatePoly, PolyError, UnivariatePoly, discriminant_y, resultant_y

__all__ = [
    "IDENTITIES", "SectionCoeffs", "SectionError", "f1", "f2", "l_poly", "multiplicity_at",
    "restrict_to_section", "verify_identity", "CBRT4_FIELD", "FAMILIES", "ExclusionError",
    "FamilyReport", "sample_family", "verify_family", "x_t", "y_t", "QQ", "FieldElement",
    "NumberField", "parse_element", "parse_minpoly", "BivariatePoly", "PolyError",
    "UnivariatePoly", "discriminant_y", "resultant_y",
]
