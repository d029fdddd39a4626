# ==================================================================================================
# --- Imports
# ==================================================================================================
from mukai_reduce.mukai import canonicalize_sign

from .algebra import DualVariant, fm_dual, tensor, variant_for
from .apply import apply
from .certificate import Check, StepCertificate, to_witness
from .elliptic import connect_via_elliptic, minimal_quadratic_solution
from .move import (
    FM_DUALS,
    CanonicalizeSign,
    ChangePolarization,
    FMDualAbelian,
    FMDualK3,
    FMDualRank0,
    Move,
    MoveError,
    RetargetLattice,
    TensorLineBundle,
    TensorPowerOfH,
    move_from_dic,
)

__all__ = [
    "canonicalize_sign",
    "DualVariant",
    "fm_dual",
    "tensor",
    "variant_for",
    "apply",
    "Check",
    "StepCertificate",
    "to_witness",
    "connect_via_elliptic",
    "minimal_quadratic_solution",
    "FM_DUALS",
    "CanonicalizeSign",
    "ChangePolarization",
    "FMDualAbelian",
    "FMDualK3",
    "FMDualRank0",
    "Move",
    "MoveError",
    "RetargetLattice",
    "TensorLineBundle",
    "TensorPowerOfH",
    "move_from_dic",
]
