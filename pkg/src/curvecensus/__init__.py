"""Census and verification toolkit for classic elliptic-curve families.

Counts isomorphism classes and distinct j-invariants of Legendre, Jacobi
quartic, Jacobi intersection, Hessian and generalized Hessian curves over
small finite fields, and checks the enumerated counts against closed-form
predictions.
"""

from .census import (
    ClassPartition,
    baseline_short_weierstrass_census,
    census,
    projective_point_count,
    s_ij_census,
)
from .families import (
    FAMILY_NAMES,
    CurveDescriptor,
    LongWeierstrass,
    get_family,
    short_model,
)
from .formulas import (
    predicted_baseline,
    predicted_class_size,
    predicted_I,
    predicted_J,
    predicted_Mk_table,
    predicted_parameter_count,
    predicted_s_ij,
)
from .gf import Element, Field, field_of_order, make_field, prime_powers
from .iso import (
    canonical_class_key,
    class_sets,
    hessian_iso,
    legendre_iso,
    weierstrass_iso,
)

__all__ = [
    "ClassPartition",
    "CurveDescriptor",
    "Element",
    "FAMILY_NAMES",
    "Field",
    "LongWeierstrass",
    "baseline_short_weierstrass_census",
    "canonical_class_key",
    "census",
    "class_sets",
    "field_of_order",
    "get_family",
    "hessian_iso",
    "legendre_iso",
    "make_field",
    "predicted_I",
    "predicted_J",
    "predicted_Mk_table",
    "predicted_baseline",
    "predicted_class_size",
    "predicted_parameter_count",
    "predicted_s_ij",
    "prime_powers",
    "projective_point_count",
    "s_ij_census",
    "short_model",
    "weierstrass_iso",
]

__version__ = "0.1.0"
