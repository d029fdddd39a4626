# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
import math
import random

# Import third-party modules
import pytest

# Import user-defined modules
from mukai_reduce.lattice import elliptic, rank1
from mukai_reduce.moves import (
    CanonicalizeSign,
    ChangePolarization,
    FMDualAbelian,
    FMDualK3,
    FMDualRank0,
    RetargetLattice,
    TensorPowerOfH,
)
from mukai_reduce.mukai import MukaiVector, discriminant_bound, make_triple, square
from mukai_reduce.planner import (
    CERTIFICATE_MISMATCH,
    CHAIN_MISMATCH,
    Path,
    PlannerError,
    Reducer,
    is_canonical,
    path_from_dic,
    path_to_dic,
    reduce_to_canonical,
    verify_path,
)

# ==================================================================================================
# --- Fixtures
# ==================================================================================================


@pytest.fixture(scope="module")
def path_example():
    S = rank1("K3", 1)
    t = make_triple(S, 2 * MukaiVector(0, S.divisor(1), 4), S.divisor(1))
    return reduce_to_canonical(t)


# ==================================================================================================
# --- Reduction of a rank-0 vector on a rank-1 surface
# ==================================================================================================


def test_example_path_moves(path_example: Path) -> None:
    assert [type(step.move) for step in path_example.steps] == [
        TensorPowerOfH,
        FMDualRank0,
        RetargetLattice,
        FMDualK3,
        CanonicalizeSign,
        TensorPowerOfH,
    ]
    assert path_example.steps[0].move == TensorPowerOfH(1)
    assert path_example.steps[-1].move == TensorPowerOfH(-3)


def test_example_path_triples(path_example: Path) -> None:
    S = rank1("K3", 1)
    h = S.divisor(1)
    assert [step.output.v for step in path_example.steps] == [
        MukaiVector(0, 2 * h, 12),
        2 * MukaiVector(6, -h, 0),
        2 * MukaiVector(6, h, 0),
        MukaiVector(0, -2 * h, 12),
        MukaiVector(0, 2 * h, 12),
        2 * MukaiVector(0, h, 0),
    ]
    assert path_example.steps[3].output.raw
    assert is_canonical(path_example.end)
    assert len(path_example) == 6


def test_example_path_verifies(path_example: Path) -> None:
    report = verify_path(path_example)
    assert report.ok
    assert report.canonical
    assert report.failures == []
    assert list(report.df_ledger["m"].unique()) == [2]
    assert list(report.df_ledger["k"].unique()) == [1]
    assert list(report.df_ledger["square"].unique()) == [8]
    assert len(report.df_ledger) == 7
    assert len(report.assumptions) == len(path_example.assumptions) > 0
    assert report.to_text().startswith("Verification passed (canonical end)")


def test_path_json_form(path_example: Path) -> None:
    dic_path = path_to_dic(path_example)
    assert set(dic_path) == {"start", "steps", "end", "assumptions"}
    p = path_from_dic(dic_path)
    assert p.start == path_example.start
    assert p.end == path_example.end
    assert [step.move for step in p.steps] == [step.move for step in path_example.steps]
    assert verify_path(p).ok


def test_tampered_path_fails_at_the_tampered_step(path_example: Path) -> None:
    dic_path = path_to_dic(path_example)
    dic_path["steps"][-1]["move"]["d"] = -2
    report = verify_path(path_from_dic(dic_path))
    assert not report.ok
    assert [(status.index, status.check) for status in report.failures] == [(6, CHAIN_MISMATCH)]
    assert "FAIL" in report.to_text()
    assert report.to_dic()["ok"] is False


def test_stripped_certificates_fail(path_example: Path) -> None:
    dic_path = path_to_dic(path_example)
    dic_path["assumptions"] = []
    for dic_step in dic_path["steps"]:
        dic_step["assumptions"] = []
        dic_step["checks"] = []
    report = verify_path(path_from_dic(dic_path))
    assert not report.ok
    assert len(report.failures) == len(path_example)
    assert {status.check for status in report.failures} == {CERTIFICATE_MISMATCH}
    # Assumptions come from the replay, not from the file
    assert report.assumptions == path_example.assumptions


def test_dropped_assumption_fails_its_step(path_example: Path) -> None:
    dic_path = path_to_dic(path_example)
    assert dic_path["steps"][1]["assumptions"]
    dic_path["steps"][1]["assumptions"] = []
    report = verify_path(path_from_dic(dic_path))
    assert [(status.index, status.check) for status in report.failures] == [
        (2, CERTIFICATE_MISMATCH)
    ]
    assert report.assumptions == path_example.assumptions


def test_broken_chain(path_example: Path) -> None:
    dic_path = path_to_dic(path_example)
    del dic_path["steps"][2]
    report = verify_path(path_from_dic(dic_path))
    assert not report.ok
    assert report.failures[0].index == 3
    assert report.failures[0].check == CHAIN_MISMATCH


@pytest.mark.parametrize(
    "dic_path, check",
    [
        ({"steps": [], "end": {}}, "format"),
        ({"start": {"surface": "rank1-k3-l1"}, "steps": [], "end": {}}, "format"),
    ],
)
def test_malformed_path(dic_path: dict, check: str) -> None:
    with pytest.raises(PlannerError) as excinfo:
        path_from_dic(dic_path)
    assert excinfo.value.check == check


def test_canonical_triple_has_empty_path() -> None:
    S = rank1("ab", 2)
    t = make_triple(S, 3 * MukaiVector(0, S.divisor(1), 0), S.divisor(1))
    p = reduce_to_canonical(t)
    assert len(p) == 0
    assert p.end == t
    report = verify_path(p)
    assert report.ok and report.canonical


def test_raw_triple_is_rejected() -> None:
    S = rank1("K3", 1)
    t = make_triple(S, MukaiVector(0, S.divisor(-1), 2), S.divisor(1), allow_raw=True)
    with pytest.raises(PlannerError) as excinfo:
        reduce_to_canonical(t)
    assert excinfo.value.check == "triple"


# ==================================================================================================
# --- Single steps
# ==================================================================================================


def test_conclusion_step() -> None:
    S = rank1("K3", 1)
    reducer = Reducer()
    reducer.current = make_triple(S, MukaiVector(2, S.divisor(1), 0), S.divisor(1))
    reducer.step_conclusion()
    assert [type(step.move) for step in reducer.l_steps] == [
        FMDualK3,
        CanonicalizeSign,
        TensorPowerOfH,
    ]
    assert reducer.l_steps[-1].move == TensorPowerOfH(-1)
    assert reducer.current.v == MukaiVector(0, S.divisor(1), 0)


def test_conclusion_step_below_threshold() -> None:
    S = rank1("K3", 1)
    reducer = Reducer()
    # m = 2, p = 1: the dual side needs 4 > M_4 = 4
    reducer.current = make_triple(S, 2 * MukaiVector(2, S.divisor(1), 0), S.divisor(1))
    with pytest.raises(PlannerError) as excinfo:
        reducer.step_conclusion()
    assert excinfo.value.step == 4
    assert excinfo.value.check == "threshold"
    assert str(excinfo.value).startswith("Step 4:")


def test_full_reduction_passes_the_threshold() -> None:
    S = rank1("K3", 1)
    h = S.divisor(1)
    t = make_triple(S, 2 * MukaiVector(2, h, 0), h)
    p = reduce_to_canonical(t)
    # 4 > M_4 fails, so the rank is moved to 2·8392704 through an even twist first
    R = 8392704
    assert [step.move for step in p.steps] == [
        TensorPowerOfH(2048),
        FMDualK3(),
        RetargetLattice(S, 2 * MukaiVector(R, h, 0), h),
        FMDualK3(),
        CanonicalizeSign(),
        TensorPowerOfH(-R // 2),
    ]
    assert p.steps[1].output.v == 2 * MukaiVector(R, -4097 * h, 2)
    report = verify_path(p)
    assert report.ok and report.canonical


@pytest.mark.parametrize("kind", ["K3", "ab"])
@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("p", range(1, 4))
def test_conclusion_only_when_the_threshold_is_empty(kind: str, k: int, p: int) -> None:
    S = rank1(kind, k)
    h = S.divisor(1)
    t = make_triple(S, MukaiVector(2 * k * p, h, 0), h)
    path = reduce_to_canonical(t)
    FMDual = FMDualK3 if kind == "K3" else FMDualAbelian
    assert [step.move for step in path.steps] == [FMDual(), CanonicalizeSign(), TensorPowerOfH(-p)]
    assert verify_path(path).ok


def test_rank_zero_step_on_elliptic_surface() -> None:
    S = elliptic("ab")
    reducer = Reducer()
    reducer.current = make_triple(S, MukaiVector(0, S.divisor(1, 1), 1), S.divisor(1, 2))
    reducer.step_rank_zero()
    assert [step.move for step in reducer.l_steps] == [
        TensorPowerOfH(1),
        ChangePolarization(S.divisor(2, 5)),
        FMDualRank0(),
    ]
    assert reducer.current.v == MukaiVector(4, S.divisor(-1, -1), 0)
    assert reducer.current.H == S.divisor(2, 5)


def test_coprime_step_on_elliptic_surface() -> None:
    S = elliptic("ab")
    reducer = Reducer()
    reducer.current = make_triple(S, MukaiVector(0, S.divisor(1, 1), 1), S.divisor(1, 2))
    reducer.step_rank_zero()
    reducer.step_coprime()
    l_moves = [step.move for step in reducer.l_steps[3:]]
    assert l_moves[0] == TensorPowerOfH(1)
    assert l_moves[1] == ChangePolarization(S.divisor(7, 19))
    retarget = l_moves[2]
    assert isinstance(retarget, RetargetLattice)
    assert retarget.target_surface == rank1("ab", 133)
    assert retarget.v_new == MukaiVector(4, retarget.target_surface.divisor(1), 33)
    assert l_moves[3] == TensorPowerOfH(512)
    w = reducer.current.w
    assert math.gcd(w.v0, w.v1.content()) == 1


# ==================================================================================================
# --- Reduction corpus
# ==================================================================================================


def _elliptic_triple(kind: str, v: MukaiVector):
    S = elliptic(kind)
    t = math.ceil(discriminant_bound(S, v)) + 2
    return make_triple(S, v, S.divisor(1, t))


def _random_cases(rng: random.Random, kind: str, m: int, k: int) -> list:
    """Two rank-positive start vectors on rank-1 surfaces, and one rank-0 vector."""
    l_cases = []
    while len(l_cases) < 2:
        l, r, n = rng.randint(1, 3), rng.randint(1, 3), rng.randint(-3, 3)
        if (l * n * n - k) % r:
            continue
        a = (l * n * n - k) // r
        if math.gcd(r, n, a) != 1:
            continue
        S = rank1(kind, l)
        l_cases.append((kind, m, k, S, m * MukaiVector(r, S.divisor(n), a), S.divisor(1)))
    S_k = rank1(kind, k)
    a = rng.randint(-3, 3)
    l_cases.append((kind, m, k, S_k, m * MukaiVector(0, S_k.divisor(1), a), S_k.divisor(1)))
    return l_cases


def _corpus() -> list:
    rng = random.Random(7)
    l_cases = []
    for kind in ("K3", "ab"):
        for m in range(1, 5):
            for k in range(1, 5):
                S_k, S_1 = rank1(kind, k), rank1(kind, 1)
                h_k, h_1 = S_k.divisor(1), S_1.divisor(1)
                S_2 = rank1(kind, k + 2)
                Y = elliptic(kind)
                l_cases += [
                    (kind, m, k, S_k, m * MukaiVector(0, h_k, 1), h_k),
                    (kind, m, k, S_1, m * MukaiVector(1, S_1.zero(), -k), h_1),
                    (kind, m, k, S_1, m * MukaiVector(1, h_1, 1 - k), h_1),
                    (kind, m, k, S_2, m * MukaiVector(2, S_2.divisor(1), 1), S_2.divisor(1)),
                ]
                if kind == "K3":
                    l_xi = [(1, Y.divisor(1, 0), -1 - k), (2, Y.divisor(1, k + 1), 0)]
                else:
                    l_xi = [(1, Y.divisor(1, k), 0), (2, Y.divisor(1, k), 0)]
                l_cases += [(kind, m, k, Y, m * MukaiVector(*v), None) for v in l_xi]
                l_cases += _random_cases(rng, kind, m, k)
        S_1 = rank1(kind, 1)
        h_1 = S_1.divisor(1)
        # g = gcd(r, ξ) > 1
        l_cases.append((kind, 1, 2, S_1, MukaiVector(2, 2 * h_1, 1), h_1))
        l_cases.append((kind, 1, 3, S_1, MukaiVector(3, 3 * h_1, 2), h_1))
    return l_cases


@pytest.mark.parametrize("kind, m, k, S, v, H", _corpus())
def test_reduction_corpus(kind, m, k, S, v, H) -> None:
    t = _elliptic_triple(kind, v) if H is None else make_triple(S, v, H)
    assert (t.m, t.k) == (m, k)
    p = reduce_to_canonical(t)
    report = verify_path(p)
    assert report.ok, report.to_text()
    assert report.canonical
    assert p.end.surface == rank1(kind, k)
    assert p.end.v == m * MukaiVector(0, p.end.surface.divisor(1), 0)
    assert list(report.df_ledger["square"].unique()) == [square(S, v)]
    assert list(report.df_ledger["m"].unique()) == [m]
    assert list(report.df_ledger["k"].unique()) == [k]
