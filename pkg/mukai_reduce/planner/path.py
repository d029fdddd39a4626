"""
This module contains the Path of certified moves produced by the reduction, its JSON codec, and
the replay of a path into a verification Report.

Classes:
    Path: A start triple, the certificates of the steps, and the end triple.
    StepStatus: Outcome of the replay of one step.
    Report: Outcome of the replay of a whole path, with the invariant ledger.

Functions:
    verify_path(p: Path) -> Report:
        Replay every move with fresh checks.

    path_to_dic(p: Path) -> dict:
        JSON form of a path.

    path_from_dic(dic_path: dict) -> Path:
        Decode a path from its JSON form.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import logging
from dataclasses import dataclass, field
from typing import Any

# Third party imports
import pandas as pd

# Local imports
from mukai_reduce.lattice import LatticeError, rank1
from mukai_reduce.mukai import (
    MukaiError,
    Triple,
    TripleError,
    canonical_vector,
    square,
    triple_from_dic,
)
from mukai_reduce.moves import MoveError, StepCertificate, apply
from mukai_reduce.utils import render_template

from .errors import PlannerError

CHAIN_MISMATCH = "chain mismatch"
CERTIFICATE_MISMATCH = "certificate mismatch"


# ==================================================================================================
# --- Path
# ==================================================================================================
@dataclass(frozen=True)
class Path:
    start: Triple
    steps: tuple[StepCertificate, ...] = field(default_factory=tuple)
    end: Triple | None = None

    def __post_init__(self):
        if self.end is None:
            object.__setattr__(self, "end", self.steps[-1].output if self.steps else self.start)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def assumptions(self) -> list[str]:
        """The named assumptions of all steps, without repetition, in order of appearance."""
        return list(dict.fromkeys(a for step in self.steps for a in step.assumptions))


def is_canonical(t: Triple) -> bool:
    """Whether t is (rank1(kind, k), m(0, h, 0), h)."""
    S = t.surface
    return (
        S.ns_rank == 1
        and S == rank1(S.kind, t.k)
        and t.v == canonical_vector(S, t.m)
        and t.H == S.divisor(1)
    )


def path_to_dic(p: Path) -> dict[str, Any]:
    return {
        "start": p.start.to_dic(),
        "steps": [step.to_dic() for step in p.steps],
        "end": p.end.to_dic(),
        "assumptions": p.assumptions,
    }


def path_from_dic(dic_path: dict[str, Any]) -> Path:
    """Decode a path from its JSON form {start, steps, end, assumptions}.

    Args:
        dic_path (dict[str, Any]): The JSON form.

    Raises:
        PlannerError: If a field is missing or a triple or move cannot be decoded. The message
            names the step. Its check is "format", or the condition violated by an invalid triple.

    Returns:
        Path: The path. Nothing is replayed.
    """
    for key in ("start", "steps", "end"):
        if key not in dic_path:
            raise PlannerError(f"Missing field '{key}' in path", "format")

    def _decode(where: str, decoder, value):
        try:
            return decoder(value)
        except TripleError as e:
            raise PlannerError(f"{where}: {e}", e.condition) from e
        except (MukaiError, MoveError, LatticeError, KeyError, TypeError) as e:
            raise PlannerError(f"{where}: {e}", "format") from e

    start = _decode("start", lambda x: triple_from_dic(x, allow_raw=True), dic_path["start"])
    l_steps = tuple(
        _decode(f"step {index}", StepCertificate.from_dic, dic_step)
        for index, dic_step in enumerate(dic_path["steps"], start=1)
    )
    end = _decode("end", lambda x: triple_from_dic(x, allow_raw=True), dic_path["end"])
    return Path(start=start, steps=l_steps, end=end)


# ==================================================================================================
# --- Verification
# ==================================================================================================
@dataclass(frozen=True)
class StepStatus:
    index: int
    move: str
    ok: bool
    check: str | None = None
    message: str = ""

    def to_dic(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "move": self.move,
            "ok": self.ok,
            "check": self.check,
            "message": self.message,
        }


@dataclass
class Report:
    """Outcome of the replay of a path.

    Attributes:
        l_status (list[StepStatus]): One entry per step, plus an entry of index len(path) + 1
            when the recorded end does not match the last output.
        df_ledger (pd.DataFrame): One row per node with m, k and the square of v.
        assumptions (list[str]): The named assumptions accumulated along the path.
        canonical (bool): Whether the path ends at a canonical triple.
    """

    l_status: list[StepStatus]
    df_ledger: pd.DataFrame
    assumptions: list[str]
    canonical: bool

    @property
    def ok(self) -> bool:
        return all(status.ok for status in self.l_status) and self.invariants_ok

    @property
    def invariants_ok(self) -> bool:
        return all(self.df_ledger[column].nunique() <= 1 for column in ("m", "k", "square"))

    @property
    def failures(self) -> list[StepStatus]:
        return [status for status in self.l_status if not status.ok]

    def to_dic(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "canonical": self.canonical,
            "invariants_ok": self.invariants_ok,
            "steps": [status.to_dic() for status in self.l_status],
            "ledger": self.df_ledger.to_dict(orient="records"),
            "assumptions": self.assumptions,
        }

    def to_text(self) -> str:
        return render_template(
            "report.txt.j2",
            report=self,
            str_ledger=self.df_ledger.to_string(index=False),
        )


def _ledger_row(index: int, t: Triple) -> dict[str, Any]:
    return {
        "node": index,
        "surface": t.surface.name,
        "v": t.v.describe(t.surface),
        "m": t.m,
        "k": t.k,
        "square": square(t.surface, t.v),
    }


def _certificate_difference(recorded: StepCertificate, replayed: StepCertificate) -> str:
    """Describe how a recorded certificate departs from its replay, or return an empty string."""
    l_recorded = [(check.name, check.ok) for check in recorded.checks]
    l_replayed = [(check.name, check.ok) for check in replayed.checks]
    if l_recorded != l_replayed:
        return f"recorded checks {l_recorded} differ from the replayed checks {l_replayed}"
    if tuple(recorded.assumptions) != tuple(replayed.assumptions):
        return (
            f"recorded assumptions {list(recorded.assumptions)} differ from "
            f"{list(replayed.assumptions)}"
        )
    return ""


def verify_path(p: Path) -> Report:
    """Replay a path: every move is applied again to its recorded input with fresh checks.

    A step fails when its input is not the previous output, when the move fails a check, when
    the recomputed output differs from the recorded one, or when the recorded checks and
    assumptions differ from those of the replay. The reported assumptions are those of the
    replayed certificates. Replay continues after a failure from the recorded output, so that
    every step is examined.

    Args:
        p (Path): The path.

    Returns:
        Report: The per-step statuses, the invariant ledger and the assumptions.
    """
    l_status: list[StepStatus] = []
    l_assumptions: list[str] = []
    l_ledger = [_ledger_row(0, p.start)]
    current = p.start
    for index, step in enumerate(p.steps, start=1):
        name_move = step.move.describe()
        if step.input != current:
            l_status.append(
                StepStatus(index, name_move, False, CHAIN_MISMATCH, "input is not the last output")
            )
        else:
            try:
                t_out, certificate = apply(step.input, step.move)
            except MoveError as e:
                l_status.append(StepStatus(index, name_move, False, e.check, str(e)))
            else:
                l_assumptions.extend(certificate.assumptions)
                if t_out != step.output:
                    l_status.append(
                        StepStatus(
                            index,
                            name_move,
                            False,
                            CHAIN_MISMATCH,
                            f"recorded output {step.output.describe()} differs from "
                            f"{t_out.describe()}",
                        )
                    )
                else:
                    difference = _certificate_difference(step, certificate)
                    if difference:
                        l_status.append(
                            StepStatus(index, name_move, False, CERTIFICATE_MISMATCH, difference)
                        )
                    else:
                        l_status.append(StepStatus(index, name_move, True))
        current = step.output
        l_ledger.append(_ledger_row(index, current))

    if p.end != current:
        l_status.append(
            StepStatus(len(p.steps) + 1, "end", False, CHAIN_MISMATCH, "end is not the last output")
        )

    report = Report(
        l_status=l_status,
        df_ledger=pd.DataFrame(l_ledger),
        assumptions=list(dict.fromkeys(l_assumptions)),
        canonical=is_canonical(p.end),
    )
    for status in report.failures:
        logging.warning(f"Step {status.index} ({status.move}) failed: {status.check}")
    return report
