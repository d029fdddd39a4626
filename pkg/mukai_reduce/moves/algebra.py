# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
from enum import Enum

# Local imports
from mukai_reduce.lattice import DivisorClass, Kind, SurfaceClass, are_proportional, intersect
from mukai_reduce.mukai import MukaiVector

from .move import MoveError


class DualVariant(str, Enum):
    K3 = "FMDualK3"
    ABELIAN = "FMDualAbelian"
    RANK0 = "FMDualRank0"


# ==================================================================================================
# --- Functions
# ==================================================================================================
def tensor(
    S: SurfaceClass, v: MukaiVector, c1L: DivisorClass, H: DivisorClass | None = None
) -> MukaiVector:
    """Compute v·ch(L) = (v0, v1 + v0·c1L, v2 + v1·c1L + v0·c1L²/2).

    Args:
        S (SurfaceClass): The surface.
        v (MukaiVector): The vector.
        c1L (DivisorClass): First Chern class of the line bundle.
        H (DivisorClass | None, optional): The polarization. When given and v0 = 0, c1L must be
            an integer multiple of H. Defaults to None.

    Raises:
        MoveError: For a rank-0 twist by a class that is not a multiple of H.

    Returns:
        MukaiVector: The twisted vector.
    """
    if H is not None and v.v0 == 0 and not c1L.is_zero():
        if not are_proportional(c1L, H) or c1L.content() % H.content():
            raise MoveError(
                f"A rank-0 vector can only be twisted by multiples of H, not {S.label(c1L)}",
                "rank-0 twist",
            )
    L_square = intersect(S, c1L, c1L)
    # Even lattice
    assert L_square % 2 == 0
    return MukaiVector(
        v.v0,
        v.v1 + v.v0 * c1L,
        v.v2 + intersect(S, v.v1, c1L) + v.v0 * L_square // 2,
    )


def fm_dual(S: SurfaceClass, v: MukaiVector, variant: DualVariant | str) -> MukaiVector:
    """Action of the Fourier-Mukai transforms on Mukai vectors.

    FMDualK3 maps (r, ξ, a) to (a, −ξ, r), FMDualRank0 maps (0, ξ, a) to (a, −ξ, 0) and
    FMDualAbelian maps (r, ξ, a) to (a, −ξ̂, r), with ξ̂ identified with ξ.

    Args:
        S (SurfaceClass): The surface.
        v (MukaiVector): The vector.
        variant (DualVariant | str): The transform.

    Raises:
        MoveError: If the variant does not match the kind of S or the rank of v.

    Returns:
        MukaiVector: The dual vector.
    """
    variant = DualVariant(variant)
    if variant is DualVariant.K3 and S.kind is not Kind.K3:
        raise MoveError(f"FMDualK3 does not apply to the Abelian surface {S.name}", "kind")
    if variant is DualVariant.ABELIAN and S.kind is not Kind.ABELIAN:
        raise MoveError(f"FMDualAbelian does not apply to the K3 surface {S.name}", "kind")
    if variant is DualVariant.RANK0:
        if v.v0 != 0:
            raise MoveError(f"FMDualRank0 needs a rank-0 vector, got rank {v.v0}", "rank")
        return MukaiVector(v.v2, -v.v1, 0)
    return MukaiVector(v.v2, -v.v1, v.v0)


def variant_for(S: SurfaceClass) -> DualVariant:
    """The rank-positive transform matching the kind of S."""
    return DualVariant.K3 if S.kind is Kind.K3 else DualVariant.ABELIAN
