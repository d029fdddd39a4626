# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import third-party modules
import pytest

# Import user-defined modules
from mukai_reduce.oracles import (
    Gate,
    NumeriTuple,
    OracleError,
    SweepBounds,
    conclusion_holds,
    gate_threshold,
    hypotheses_hold,
    resolve_workers,
    sweep_numeri,
)
from mukai_reduce.oracles.numeri import ENV_WORKERS

# ==================================================================================================
# --- Conditions
# ==================================================================================================


def test_counterexample_without_gate() -> None:
    t = NumeriTuple(k=1, l=1, r=1, n=2, a=3, n1=1, a1=2, r1=1)
    assert hypotheses_hold(t)
    assert not conclusion_holds(t)


@pytest.mark.parametrize(
    "t",
    [
        # l·n² − r·a ≠ k
        NumeriTuple(1, 1, 1, 2, 2, 1, 1, 1),
        # a₁ ≥ a
        NumeriTuple(1, 1, 1, 2, 3, 1, 3, 1),
        # n₁/a₁ > n/a
        NumeriTuple(1, 1, 1, 2, 3, 1, 1, 1),
        # l·n₁² − r₁·a₁ < −1
        NumeriTuple(1, 1, 1, 2, 3, 1, 2, 2),
    ],
)
def test_hypotheses_fail(t: NumeriTuple) -> None:
    assert not hypotheses_hold(t)


def test_gate_threshold() -> None:
    assert gate_threshold(2, 3, Gate.STRICT) == 32 * 8 * 3
    assert gate_threshold(2, 3, Gate.NONE) == 0


# ==================================================================================================
# --- Sweep
# ==================================================================================================


def test_diagnostic_sweep_finds_the_counterexample() -> None:
    result = sweep_numeri(SweepBounds(1, 1, 1, 2), gate="none")
    assert result.counterexamples == [NumeriTuple(1, 1, 1, 2, 3, 1, 2, 1)]
    assert result.n_candidates == 1
    assert result.n_examined == 1
    assert result.to_dic()["n_counterexamples"] == 1
    assert len(result.to_dataframe()) == 1
    assert result.to_text().startswith("1 counterexamples")


def test_strict_sweep_below_the_gate_is_empty() -> None:
    result = sweep_numeri(SweepBounds(1, 1, 1, 2), gate=Gate.STRICT)
    assert result.counterexamples == []
    assert result.n_candidates == 0
    assert result.to_text().startswith("0 counterexamples")


def test_strict_sweep_has_no_counterexample() -> None:
    bounds = SweepBounds(r_max=2, k_max=2, l_max=2, n_max=1024)
    result = sweep_numeri(bounds, gate=Gate.STRICT, workers=2)
    assert result.counterexamples == []
    assert result.n_candidates > 0
    assert result.n_examined > 0


def test_workers_do_not_change_the_result() -> None:
    bounds = SweepBounds(r_max=3, k_max=2, l_max=2, n_max=12)
    result_serial = sweep_numeri(bounds, gate=Gate.NONE, workers=1)
    result_parallel = sweep_numeri(bounds, gate=Gate.NONE, workers=3)
    assert result_serial.counterexamples == result_parallel.counterexamples
    assert result_serial.n_examined == result_parallel.n_examined
    assert result_serial.counterexamples == sorted(result_serial.counterexamples)


def test_sweep_bounds_must_be_positive() -> None:
    with pytest.raises(OracleError) as excinfo:
        SweepBounds(0, 1, 1, 1)
    assert excinfo.value.condition == "bounds"


# ==================================================================================================
# --- Workers
# ==================================================================================================


def test_explicit_workers_win(monkeypatch) -> None:
    monkeypatch.setenv(ENV_WORKERS, "4")
    assert resolve_workers(3, {"sweep": {"workers": 2}}) == 3


def test_environment_before_configuration(monkeypatch) -> None:
    monkeypatch.setenv(ENV_WORKERS, "4")
    assert resolve_workers(None, {"sweep": {"workers": 2}}) == 4


def test_configuration_before_cores(monkeypatch) -> None:
    monkeypatch.delenv(ENV_WORKERS, raising=False)
    assert resolve_workers(None, {"sweep": {"workers": 2}}) == 2
    assert resolve_workers(None, {"sweep": {"workers": None}}) >= 1
    assert resolve_workers(0) == 1


def test_malformed_environment(monkeypatch) -> None:
    monkeypatch.setenv(ENV_WORKERS, "many")
    with pytest.raises(OracleError) as excinfo:
        resolve_workers()
    assert excinfo.value.condition == "workers"
