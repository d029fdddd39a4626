"""
This module contains the exhaustive sweep of the numerical inequality used by the dualization of
positive-rank vectors on rank-1 surfaces.

For positive integers k, l, r, n, a, n₁, a₁, r₁ with
    (1) l·n² − r·a = k,
    (2) l·n₁² − r₁·a₁ ≥ −1,
    (3) a₁ < a,
    (4) n₁/a₁ < n/a, or n₁/a₁ = n/a and r₁/a₁ > r/a,
and n > 32r³k, either n₁/r₁ > n/r, or n₁/r₁ = n/r and a₁/r₁ > a/r. The sweep lists every tuple
within bounds violating this conclusion.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import logging
import multiprocessing
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, NamedTuple

# Third party imports
import pandas as pd
import psutil

# Local imports
from mukai_reduce.utils import nested_get

from .numerics import OracleError

ENV_WORKERS = "MUKAI_REDUCE_WORKERS"


# ==================================================================================================
# --- Types
# ==================================================================================================
class Gate(str, Enum):
    STRICT = "strict"
    NONE = "none"


@dataclass(frozen=True)
class SweepBounds:
    r_max: int
    k_max: int
    l_max: int
    n_max: int

    def __post_init__(self):
        for name in ("r_max", "k_max", "l_max", "n_max"):
            if getattr(self, name) < 1:
                raise OracleError(f"{name} must be at least 1, got {getattr(self, name)}", "bounds")

    def to_dic(self) -> dict[str, int]:
        return {"r_max": self.r_max, "k_max": self.k_max, "l_max": self.l_max, "n_max": self.n_max}


class NumeriTuple(NamedTuple):
    k: int
    l: int
    r: int
    n: int
    a: int
    n1: int
    a1: int
    r1: int


@dataclass
class SweepResult:
    """Outcome of a sweep.

    Attributes:
        bounds (SweepBounds): The bounds of the sweep.
        gate (Gate): STRICT for n > 32r³k, NONE for the diagnostic sweep with n > 0.
        counterexamples (list[NumeriTuple]): Tuples violating the conclusion, in tuple order.
        n_candidates (int): Number of (k, l, r, n, a) passing (1) and the gate.
        n_examined (int): Number of complete tuples checked.
    """

    bounds: SweepBounds
    gate: Gate
    counterexamples: list[NumeriTuple] = field(default_factory=list)
    n_candidates: int = 0
    n_examined: int = 0

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(self.counterexamples, columns=list(NumeriTuple._fields))

    def to_dic(self) -> dict[str, Any]:
        return {
            "bounds": self.bounds.to_dic(),
            "gate": self.gate.value,
            "n_candidates": self.n_candidates,
            "n_examined": self.n_examined,
            "n_counterexamples": len(self.counterexamples),
            "counterexamples": [t._asdict() for t in self.counterexamples],
        }

    def to_text(self) -> str:
        str_summary = (
            f"{len(self.counterexamples)} counterexamples "
            f"({self.n_candidates} candidate tuples, {self.n_examined} examined, "
            f"gate {self.gate.value})"
        )
        if not self.counterexamples:
            return str_summary + "\n"
        return str_summary + "\n" + self.to_dataframe().to_string(index=False) + "\n"


# ==================================================================================================
# --- Conditions
# ==================================================================================================
def hypotheses_hold(t: NumeriTuple) -> bool:
    """Conditions (1) to (4), in exact rationals."""
    if min(t) < 1:
        return False
    if t.l * t.n**2 - t.r * t.a != t.k:
        return False
    if t.l * t.n1**2 - t.r1 * t.a1 < -1 or t.a1 >= t.a:
        return False
    slope_1, slope = Fraction(t.n1, t.a1), Fraction(t.n, t.a)
    return slope_1 < slope or (slope_1 == slope and Fraction(t.r1, t.a1) > Fraction(t.r, t.a))


def conclusion_holds(t: NumeriTuple) -> bool:
    slope_1, slope = Fraction(t.n1, t.r1), Fraction(t.n, t.r)
    return slope_1 > slope or (slope_1 == slope and Fraction(t.a1, t.r1) > Fraction(t.a, t.r))


def gate_threshold(r: int, k: int, gate: Gate) -> int:
    """n must exceed this value."""
    return 32 * r**3 * k if gate is Gate.STRICT else 0


def _ceil_div(x: int, y: int) -> int:
    return -(-x // y)


# ==================================================================================================
# --- Sweep
# ==================================================================================================
def _sweep_rank(r: int, bounds: SweepBounds, gate: Gate) -> tuple[list[NumeriTuple], int, int]:
    """Sweep all tuples with a fixed r.

    A violation has n₁/r₁ ≤ n/r and, by (4), n₁/a₁ ≤ n/a, so that r₁ ≥ r·n₁/n and a₁ ≥ a·n₁/n,
    while (2) gives r₁·a₁ ≤ l·n₁² + 1 and (3), (4) give n₁ < n. Only this region is examined.
    """
    l_counterexamples: list[NumeriTuple] = []
    n_candidates, n_examined = 0, 0
    for k in range(1, bounds.k_max + 1):
        threshold = gate_threshold(r, k, gate)
        for l in range(1, bounds.l_max + 1):
            for n in range(threshold + 1, bounds.n_max + 1):
                numerator = l * n * n - k
                if numerator <= 0 or numerator % r:
                    continue
                a = numerator // r
                n_candidates += 1
                for n1 in range(1, n):
                    cap = l * n1 * n1 + 1
                    a1_min = max(1, _ceil_div(a * n1, n))
                    r1_min = max(1, _ceil_div(r * n1, n))
                    for r1 in range(r1_min, cap // a1_min + 1):
                        for a1 in range(a1_min, min(a - 1, cap // r1) + 1):
                            n_examined += 1
                            t = NumeriTuple(k, l, r, n, a, n1, a1, r1)
                            if hypotheses_hold(t) and not conclusion_holds(t):
                                logging.warning(f"Counterexample: {t}")
                                l_counterexamples.append(t)
    return l_counterexamples, n_candidates, n_examined


def _sweep_rank_star(args: tuple[int, SweepBounds, Gate]) -> tuple[list[NumeriTuple], int, int]:
    return _sweep_rank(*args)


def resolve_workers(workers: int | None = None, config: dict[str, Any] | None = None) -> int:
    """Number of worker processes: the explicit value, else the MUKAI_REDUCE_WORKERS environment
    variable, else sweep.workers of the configuration, else the number of logical cores."""
    if workers is None and os.environ.get(ENV_WORKERS):
        try:
            workers = int(os.environ[ENV_WORKERS])
        except ValueError as e:
            raise OracleError(f"{ENV_WORKERS} must be an integer", "workers") from e
    if workers is None and config is not None:
        workers = nested_get(config, ["sweep", "workers"])
    if workers is None:
        workers = psutil.cpu_count(logical=True) or 1
    return max(1, int(workers))


def sweep_numeri(
    bounds: SweepBounds,
    gate: Gate | str = Gate.STRICT,
    workers: int = 1,
    chunk_size: int = 1,
) -> SweepResult:
    """Enumerate every tuple within bounds satisfying the hypotheses and the gate, and return those
    violating the conclusion.

    Args:
        bounds (SweepBounds): Bounds on r, k, l and n.
        gate (Gate | str, optional): "strict" for n > 32r³k, "none" for the diagnostic sweep.
            Defaults to Gate.STRICT.
        workers (int, optional): Number of processes, splitting the values of r. Defaults to 1.
        chunk_size (int, optional): Values of r sent to a worker at once. Defaults to 1.

    Returns:
        SweepResult: The counterexamples, sorted, and the candidate counts.
    """
    gate = Gate(gate)
    l_args = [(r, bounds, gate) for r in range(1, bounds.r_max + 1)]
    result = SweepResult(bounds=bounds, gate=gate)

    def _collect(r: int, partial: tuple[list[NumeriTuple], int, int]) -> None:
        l_counterexamples, n_candidates, n_examined = partial
        result.counterexamples.extend(l_counterexamples)
        result.n_candidates += n_candidates
        result.n_examined += n_examined
        logging.info(
            f"Sweep r={r}/{bounds.r_max}: {n_candidates} candidates, {n_examined} examined"
        )

    if workers <= 1 or len(l_args) == 1:
        for args in l_args:
            _collect(args[0], _sweep_rank(*args))
    else:
        with multiprocessing.Pool(processes=min(workers, len(l_args))) as pool:
            # imap keeps the order of r
            for args, partial in zip(
                l_args, pool.imap(_sweep_rank_star, l_args, chunksize=max(1, chunk_size))
            ):
                _collect(args[0], partial)

    result.counterexamples.sort()
    return result
