# ==================================================================================================
# --- Imports
# ==================================================================================================
from .triple import (
    NonPositiveSquareError,
    NotAmpleError,
    NotGenericError,
    NotMukaiVectorError,
    NotPrimitiveError,
    RankZeroDegenerateError,
    Triple,
    TripleError,
    make_triple,
    triple_from_dic,
)
from .vector import (
    MukaiError,
    MukaiVector,
    auxiliary_vector,
    canonical_vector,
    canonicalize_sign,
    discriminant_bound,
    is_mukai_vector,
    moduli_dims,
    pairing,
    primitive_decomposition,
    square,
    vector_of_sheaf,
)

__all__ = [
    "MukaiError",
    "MukaiVector",
    "auxiliary_vector",
    "canonical_vector",
    "canonicalize_sign",
    "discriminant_bound",
    "is_mukai_vector",
    "moduli_dims",
    "pairing",
    "primitive_decomposition",
    "square",
    "vector_of_sheaf",
    "NonPositiveSquareError",
    "NotAmpleError",
    "NotGenericError",
    "NotMukaiVectorError",
    "NotPrimitiveError",
    "RankZeroDegenerateError",
    "Triple",
    "TripleError",
    "make_triple",
    "triple_from_dic",
]
