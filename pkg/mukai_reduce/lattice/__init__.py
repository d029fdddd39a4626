# ==================================================================================================
# --- Imports
# ==================================================================================================
from .loader import (
    load_surface_from_path,
    surface_from_dic,
    surface_from_json_value,
    surface_to_json_value,
)
from .surface import (
    ELLIPTIC_ABELIAN,
    ELLIPTIC_K3,
    DivisorClass,
    Kind,
    LatticeError,
    SurfaceClass,
    are_proportional,
    dual_surface,
    effective_classes_below,
    effective_coefficients,
    elliptic,
    intersect,
    is_ample,
    is_effective,
    is_effective_or_zero,
    is_preset,
    is_primitive,
    normalize_sign,
    orthogonal_generator,
    preset,
    primitive_part,
    rank1,
    square,
)

__all__ = [
    "ELLIPTIC_ABELIAN",
    "ELLIPTIC_K3",
    "DivisorClass",
    "Kind",
    "LatticeError",
    "SurfaceClass",
    "are_proportional",
    "dual_surface",
    "effective_classes_below",
    "effective_coefficients",
    "elliptic",
    "intersect",
    "is_ample",
    "is_effective",
    "is_effective_or_zero",
    "is_preset",
    "is_primitive",
    "normalize_sign",
    "orthogonal_generator",
    "preset",
    "primitive_part",
    "rank1",
    "square",
    "load_surface_from_path",
    "surface_from_dic",
    "surface_from_json_value",
    "surface_to_json_value",
]
