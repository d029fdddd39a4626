"""
This module contains the certificate of a move: the checked preconditions with their witnesses
and the named hypotheses that cannot be checked numerically.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

# Local imports
from mukai_reduce.mukai import Triple, triple_from_dic

from .move import Move, move_from_dic


# ==================================================================================================
# --- Functions
# ==================================================================================================
def to_witness(value: Any) -> Any:
    """Convert a witness to plain JSON types. Rationals become "p/q" strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return str(value)
    if isinstance(value, dict):
        return {str(key): to_witness(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_witness(item) for item in value]
    if hasattr(value, "to_dic"):
        return value.to_dic()
    return value


# ==================================================================================================
# --- Classes
# ==================================================================================================
@dataclass(frozen=True)
class Check:
    name: str
    witness: Any
    ok: bool

    def to_dic(self) -> dict[str, Any]:
        return {"name": self.name, "witness": to_witness(self.witness), "ok": self.ok}


@dataclass(frozen=True)
class StepCertificate:
    """
    The certificate of one move.

    Attributes:
        move (Move): The move.
        input (Triple): The triple the move was applied to.
        output (Triple): The resulting triple.
        checks (tuple[Check, ...]): The checked preconditions.
        assumptions (tuple[str, ...]): Named hypotheses that are not checked numerically.
    """

    move: Move
    input: Triple
    output: Triple
    checks: tuple[Check, ...] = field(default_factory=tuple)
    assumptions: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def to_dic(self) -> dict[str, Any]:
        return {
            "move": self.move.to_dic(),
            "input": self.input.to_dic(),
            "output": self.output.to_dic(),
            "checks": [check.to_dic() for check in self.checks],
            "assumptions": list(self.assumptions),
        }

    @classmethod
    def from_dic(cls, dic_certificate: dict[str, Any]) -> "StepCertificate":
        return cls(
            move=move_from_dic(dic_certificate["move"]),
            input=triple_from_dic(dic_certificate["input"], allow_raw=True),
            output=triple_from_dic(dic_certificate["output"], allow_raw=True),
            checks=tuple(
                Check(dic_check["name"], dic_check.get("witness"), bool(dic_check["ok"]))
                for dic_check in dic_certificate.get("checks", [])
            ),
            assumptions=tuple(dic_certificate.get("assumptions", [])),
        )
