# ==================================================================================================
# --- Imports
# ==================================================================================================
from .errors import PlannerError
from .path import (
    CERTIFICATE_MISMATCH,
    CHAIN_MISMATCH,
    Path,
    Report,
    StepStatus,
    is_canonical,
    path_from_dic,
    path_to_dic,
    verify_path,
)
from .reduce import (
    Reducer,
    find_dual_polarization,
    find_polarization_twist,
    reduce_to_canonical,
)
from .twists import find_coprime_twist, find_even_twist, twisted_coefficients

__all__ = [
    "PlannerError",
    "CERTIFICATE_MISMATCH",
    "CHAIN_MISMATCH",
    "Path",
    "Report",
    "StepStatus",
    "is_canonical",
    "path_from_dic",
    "path_to_dic",
    "verify_path",
    "Reducer",
    "find_dual_polarization",
    "find_polarization_twist",
    "reduce_to_canonical",
    "find_coprime_twist",
    "find_even_twist",
    "twisted_coefficients",
]
