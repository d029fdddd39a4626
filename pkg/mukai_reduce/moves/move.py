"""
This module defines the moves acting on (m,k)-triples and their JSON codec.

Classes:
    Move: Base class of the moves.
    TensorLineBundle, TensorPowerOfH, FMDualK3, FMDualAbelian, FMDualRank0, ChangePolarization,
    RetargetLattice, CanonicalizeSign: The move variants.

Functions:
    move_from_dic(dic_move: dict) -> Move:
        Decode a move from its JSON form.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
from dataclasses import dataclass
from typing import Any, ClassVar

# Local imports
from mukai_reduce.lattice import (
    DivisorClass,
    SurfaceClass,
    surface_from_json_value,
    surface_to_json_value,
)
from mukai_reduce.mukai import MukaiVector


# ==================================================================================================
# --- Exceptions
# ==================================================================================================
class MoveError(ValueError):
    """Raised when a move cannot be applied. The attribute check names the failed precondition."""

    def __init__(self, message: str, check: str, certificate: Any = None):
        super().__init__(message)
        self.check = check
        self.certificate = certificate


# ==================================================================================================
# --- Classes
# ==================================================================================================
@dataclass(frozen=True)
class Move:
    type: ClassVar[str] = "Move"

    def payload(self) -> dict[str, Any]:
        return {}

    def to_dic(self) -> dict[str, Any]:
        return {"type": self.type, **self.payload()}

    def describe(self) -> str:
        dic_payload = self.payload()
        if not dic_payload:
            return self.type
        str_payload = ", ".join(f"{key}={value}" for key, value in dic_payload.items())
        return f"{self.type}({str_payload})"


@dataclass(frozen=True)
class TensorLineBundle(Move):
    type: ClassVar[str] = "TensorLineBundle"
    c1L: DivisorClass

    def payload(self) -> dict[str, Any]:
        return {"c1L": self.c1L.to_list()}


@dataclass(frozen=True)
class TensorPowerOfH(Move):
    type: ClassVar[str] = "TensorPowerOfH"
    d: int

    def payload(self) -> dict[str, Any]:
        return {"d": self.d}


@dataclass(frozen=True)
class FMDualK3(Move):
    type: ClassVar[str] = "FMDualK3"


@dataclass(frozen=True)
class FMDualAbelian(Move):
    type: ClassVar[str] = "FMDualAbelian"


@dataclass(frozen=True)
class FMDualRank0(Move):
    type: ClassVar[str] = "FMDualRank0"


@dataclass(frozen=True)
class ChangePolarization(Move):
    type: ClassVar[str] = "ChangePolarization"
    Hnew: DivisorClass

    def payload(self) -> dict[str, Any]:
        return {"Hnew": self.Hnew.to_list()}


@dataclass(frozen=True)
class RetargetLattice(Move):
    type: ClassVar[str] = "RetargetLattice"
    target_surface: SurfaceClass
    v_new: MukaiVector
    H_new: DivisorClass

    def payload(self) -> dict[str, Any]:
        return {
            "target_surface": surface_to_json_value(self.target_surface),
            "v_new": self.v_new.to_dic(),
            "H_new": self.H_new.to_list(),
        }


@dataclass(frozen=True)
class CanonicalizeSign(Move):
    type: ClassVar[str] = "CanonicalizeSign"


FM_DUALS = (FMDualK3, FMDualAbelian, FMDualRank0)


def move_from_dic(dic_move: dict[str, Any]) -> Move:
    """Decode a move from its JSON form {"type": ..., payload}.

    Args:
        dic_move (dict[str, Any]): The JSON form.

    Raises:
        MoveError: If the type is unknown or the payload malformed (check "format").

    Returns:
        Move: The move.
    """
    type_move = dic_move.get("type")
    try:
        if type_move == TensorLineBundle.type:
            return TensorLineBundle(DivisorClass(dic_move["c1L"]))
        if type_move == TensorPowerOfH.type:
            return TensorPowerOfH(int(dic_move["d"]))
        if type_move == ChangePolarization.type:
            return ChangePolarization(DivisorClass(dic_move["Hnew"]))
        if type_move == RetargetLattice.type:
            return RetargetLattice(
                surface_from_json_value(dic_move["target_surface"]),
                MukaiVector.from_dic(dic_move["v_new"]),
                DivisorClass(dic_move["H_new"]),
            )
        for cls in (*FM_DUALS, CanonicalizeSign):
            if type_move == cls.type:
                return cls()
    except (KeyError, TypeError, ValueError) as e:
        raise MoveError(f"Malformed move {dic_move}: {e}", "format") from e
    raise MoveError(f"Unknown move type: {type_move}", "format")
