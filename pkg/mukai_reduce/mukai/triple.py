"""
This module contains the Triple class, a validated (m,k)-triple (S, v, H), and the JSON codec of
triples.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
from dataclasses import dataclass
from typing import Any

# Local imports
from mukai_reduce.lattice import (
    DivisorClass,
    SurfaceClass,
    is_ample,
    is_primitive,
    surface_from_json_value,
    surface_to_json_value,
)

from .vector import (
    MukaiError,
    MukaiVector,
    canonicalize_sign,
    is_mukai_vector,
    primitive_decomposition,
    square,
)


# ==================================================================================================
# --- Exceptions
# ==================================================================================================
class TripleError(MukaiError):
    """Base class of the rejections of make_triple. Each subclass names one condition."""

    condition = "triple"

    def __init__(self, message: str):
        super().__init__(message, self.condition)


class NotMukaiVectorError(TripleError):
    condition = "not a Mukai vector"


class NonPositiveSquareError(TripleError):
    condition = "w² ≤ 0"


class RankZeroDegenerateError(TripleError):
    condition = "rank-0 w₂=0 with ρ>1"


class NotPrimitiveError(TripleError):
    condition = "not primitive"


class NotAmpleError(TripleError):
    condition = "not ample"


class NotGenericError(TripleError):
    condition = "not generic"

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


# ==================================================================================================
# --- Class
# ==================================================================================================
@dataclass(frozen=True)
class Triple:
    """
    An (m,k)-triple: a surface, a Mukai vector v = m·w with w primitive and w² = 2k, and a
    primitive v-generic polarization H. Instances are built through make_triple.

    Attributes:
        surface (SurfaceClass): The surface.
        v (MukaiVector): The Mukai vector.
        H (DivisorClass): The polarization.
        m (int): The multiplicity of v.
        k (int): Half the square of the primitive part of v.
    """

    surface: SurfaceClass
    v: MukaiVector
    H: DivisorClass
    m: int
    k: int

    @property
    def w(self) -> MukaiVector:
        return primitive_decomposition(self.v)[1]

    @property
    def raw(self) -> bool:
        """Whether v is only a Mukai vector up to sign canonicalization."""
        return not is_mukai_vector(self.surface, self.v)

    def describe(self) -> str:
        S = self.surface
        return f"({S.name}, {self.v.describe(S)}, H={S.label(self.H)})"

    def to_dic(self) -> dict[str, Any]:
        return {
            "surface": surface_to_json_value(self.surface),
            "v": self.v.to_dic(),
            "H": self.H.to_list(),
        }


def make_triple(
    S: SurfaceClass, v: MukaiVector, H: DivisorClass, allow_raw: bool = False
) -> Triple:
    """Validate (S, v, H) as an (m,k)-triple.

    Args:
        S (SurfaceClass): The surface.
        v (MukaiVector): The Mukai vector.
        H (DivisorClass): The polarization.
        allow_raw (bool, optional): Accept a raw vector whose sign-canonical form is a Mukai
            vector; the conditions are then checked on that form. Defaults to False.

    Raises:
        TripleError: One subclass per violated condition.

    Returns:
        Triple: The validated triple, with (m, k) computed.
    """
    # Imported here as the walls module depends on this package
    from mukai_reduce.walls import is_generic

    if v.is_zero():
        raise NotMukaiVectorError("The zero vector is not a Mukai vector")
    v_checked = v
    if allow_raw and not is_mukai_vector(S, v):
        v_checked = canonicalize_sign(S, v)
    if not is_mukai_vector(S, v_checked):
        raise NotMukaiVectorError(f"{v.describe(S)} is not a Mukai vector on {S.name}")

    m, w = primitive_decomposition(v_checked)
    w_square = square(S, w)
    if w_square <= 0:
        raise NonPositiveSquareError(f"w = {w.describe(S)} has w² = {w_square} ≤ 0")
    if w.v0 == 0 and S.ns_rank > 1 and w.v2 == 0:
        raise RankZeroDegenerateError(f"w = {w.describe(S)} has rank 0 and w₂ = 0 on {S.name}")

    if len(H) != S.ns_rank or not is_primitive(H):
        raise NotPrimitiveError(f"H = {H.coords} is not a primitive class of {S.name}")
    if not is_ample(S, H):
        raise NotAmpleError(f"H = {S.label(H)} is not ample on {S.name}")

    generic, witness = is_generic(S, v_checked, H)
    if not generic:
        raise NotGenericError(
            f"H = {S.label(H)} lies on the wall of D = {S.label(witness.D)} for {v.describe(S)}",
            witness,
        )

    return Triple(surface=S, v=v, H=H, m=m, k=w_square // 2)


def triple_from_dic(dic_triple: dict[str, Any], allow_raw: bool = False) -> Triple:
    """Decode and validate a triple from its JSON form {"surface", "v", "H"}."""
    for key in ("surface", "v", "H"):
        if key not in dic_triple:
            raise MukaiError(f"Missing field '{key}' in triple", "format")
    S = surface_from_json_value(dic_triple["surface"])
    v = MukaiVector.from_dic(dic_triple["v"])
    try:
        H = DivisorClass(dic_triple["H"])
    except (TypeError, ValueError) as e:
        raise MukaiError(f"Malformed polarization {dic_triple['H']}: {e}", "format") from e
    return make_triple(S, v, H, allow_raw=allow_raw)
