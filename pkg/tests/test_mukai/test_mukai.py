# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
from fractions import Fraction

# Import third-party modules
import pytest

# Import user-defined modules
from mukai_reduce.lattice import DivisorClass, elliptic, preset, rank1
from mukai_reduce.mukai import (
    MukaiError,
    MukaiVector,
    NonPositiveSquareError,
    NotAmpleError,
    NotGenericError,
    NotMukaiVectorError,
    NotPrimitiveError,
    RankZeroDegenerateError,
    auxiliary_vector,
    canonical_vector,
    canonicalize_sign,
    discriminant_bound,
    is_mukai_vector,
    make_triple,
    moduli_dims,
    pairing,
    primitive_decomposition,
    square,
    triple_from_dic,
    vector_of_sheaf,
)

# ==================================================================================================
# --- Pairing and square
# ==================================================================================================


def test_pairing_on_elliptic_k3() -> None:
    S = elliptic("K3")
    v = MukaiVector(2, S.divisor(1, 3), -1)
    w = MukaiVector(1, S.divisor(0, 1), 4)
    # v1·w1 = σ·f + 3f² = 1, then − 2·4 − (−1)·1
    assert pairing(S, v, w) == 1 - 8 + 1
    assert pairing(S, v, w) == pairing(S, w, v)


@pytest.mark.parametrize(
    "name, v, v_square",
    [
        ("rank1-k3-l1", (0, (1,), 4), 2),
        ("rank1-k3-l1", (6, (-1,), 0), 2),
        ("rank1-k3-l3", (2, (1,), 1), 2),
        ("elliptic-k3", (1, (1, 0), -2), 2),
        ("elliptic-k3", (0, (1, 1), 1), 0),
        ("elliptic-ab", (2, (1, 2), 0), 4),
    ],
)
def test_square(name: str, v: tuple, v_square: int) -> None:
    S = preset(name)
    assert square(S, MukaiVector(v[0], DivisorClass(v[1]), v[2])) == v_square


def test_pairing_rejects_vectors_of_another_surface() -> None:
    S = elliptic("K3")
    with pytest.raises(MukaiError) as excinfo:
        square(S, MukaiVector(1, DivisorClass([1]), 0))
    assert excinfo.value.condition == "surface"


def test_vector_arithmetic() -> None:
    v = MukaiVector(1, DivisorClass([1, -2]), 3)
    assert 2 * v == MukaiVector(2, DivisorClass([2, -4]), 6)
    assert -v == MukaiVector(-1, DivisorClass([-1, 2]), -3)
    assert (v + v).content() == 2
    assert MukaiVector(0, DivisorClass([0, 0]), 0).is_zero()


# ==================================================================================================
# --- Mukai vectors of sheaves
# ==================================================================================================


@pytest.mark.parametrize(
    "v, expected",
    [
        ((1, (0, 0), 0), True),
        ((0, (1, 1), -4), True),
        ((0, (0, 0), 3), True),
        ((0, (0, 0), -3), False),
        ((0, (-1, 1), 2), False),
        ((-1, (1, 0), 0), False),
    ],
)
def test_is_mukai_vector(v: tuple, expected: bool) -> None:
    S = elliptic("K3")
    assert is_mukai_vector(S, MukaiVector(v[0], DivisorClass(v[1]), v[2])) is expected


def test_vector_of_sheaf_adds_epsilon_rank() -> None:
    assert vector_of_sheaf(rank1("K3", 1), 2, DivisorClass([1]), 3).v2 == 5
    assert vector_of_sheaf(rank1("ab", 1), 2, DivisorClass([1]), 3).v2 == 3
    with pytest.raises(MukaiError):
        vector_of_sheaf(rank1("K3", 1), -1, DivisorClass([1]), 0)


def test_primitive_decomposition() -> None:
    m, w = primitive_decomposition(MukaiVector(0, DivisorClass([2]), 8))
    assert m == 2
    assert w == MukaiVector(0, DivisorClass([1]), 4)
    with pytest.raises(MukaiError) as excinfo:
        primitive_decomposition(MukaiVector(0, DivisorClass([0]), 0))
    assert excinfo.value.condition == "zero"


@pytest.mark.parametrize(
    "v, expected",
    [
        ((-2, (1,), 3), (2, (-1,), -3)),
        ((0, (-2,), 5), (0, (2,), 5)),
        ((3, (-1,), 0), (3, (-1,), 0)),
        ((0, (1,), -4), (0, (1,), -4)),
    ],
)
def test_canonicalize_sign(v: tuple, expected: tuple) -> None:
    S = rank1("K3", 1)
    v_canonical = canonicalize_sign(S, MukaiVector(v[0], DivisorClass(v[1]), v[2]))
    assert v_canonical == MukaiVector(expected[0], DivisorClass(expected[1]), expected[2])
    assert square(S, v_canonical) == square(S, MukaiVector(v[0], DivisorClass(v[1]), v[2]))


# ==================================================================================================
# --- Numerical invariants
# ==================================================================================================


def test_discriminant_bound_k3() -> None:
    S = elliptic("K3")
    # (4/4)·4 + 2⁴/2
    assert discriminant_bound(S, MukaiVector(2, S.zero(), -1)) == 12


def test_discriminant_bound_abelian_is_exact() -> None:
    S = elliptic("ab")
    # (9/4)·4 + 3²/2
    bound = discriminant_bound(S, MukaiVector(3, S.divisor(1, 2), 0))
    assert bound == Fraction(27, 2)
    assert isinstance(bound, Fraction)
    assert discriminant_bound(S, MukaiVector(1, S.divisor(1, 1), 0)) == Fraction(1, 1)


def test_discriminant_bound_needs_positive_rank() -> None:
    S = elliptic("K3")
    with pytest.raises(MukaiError) as excinfo:
        discriminant_bound(S, MukaiVector(0, S.divisor(1, 1), 1))
    assert excinfo.value.condition == "rank"


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("k", range(1, 7))
def test_moduli_dims(m: int, k: int) -> None:
    assert moduli_dims(m, k, "K3") == (2 * m * m * k + 2, None)
    assert moduli_dims(m, k, "Abelian") == (2 * m * m * k + 2, 2 * m * m * k - 2)


def test_moduli_dims_examples() -> None:
    assert moduli_dims(2, 1, "K3") == (10, None)
    assert moduli_dims(2, 1, "ab") == (10, 6)
    with pytest.raises(MukaiError) as excinfo:
        moduli_dims(0, 1, "K3")
    assert excinfo.value.condition == "range"


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 5])
def test_auxiliary_vector_has_canonical_square(m: int, k: int) -> None:
    S = rank1("K3", k)
    v_aux = auxiliary_vector(S, m)
    assert v_aux == MukaiVector(0, DivisorClass([m]), 1 - m * m * k)
    assert square(S, v_aux) == square(S, canonical_vector(S, m)) == 2 * m * m * k


# ==================================================================================================
# --- Triples
# ==================================================================================================


def test_make_triple_computes_m_and_k() -> None:
    S = rank1("K3", 1)
    t = make_triple(S, MukaiVector(0, S.divisor(2), 8), S.divisor(1))
    assert (t.m, t.k) == (2, 1)
    assert t.w == MukaiVector(0, S.divisor(1), 4)
    assert not t.raw
    assert t.describe() == "(rank1-k3-l1, (0, 2h, 8), H=h)"


def test_triple_json_form() -> None:
    S = elliptic("K3")
    t = make_triple(S, MukaiVector(1, S.divisor(1, 0), -2), S.divisor(1, 5))
    dic_triple = t.to_dic()
    assert dic_triple == {
        "surface": "elliptic-k3",
        "v": {"v0": 1, "v1": [1, 0], "v2": -2},
        "H": [1, 5],
    }
    assert triple_from_dic(dic_triple) == t


@pytest.mark.parametrize(
    "name, v, H, error",
    [
        ("rank1-k3-l1", (0, (0,), 0), (1,), NotMukaiVectorError),
        ("rank1-k3-l1", (-1, (1,), 0), (1,), NotMukaiVectorError),
        ("rank1-k3-l1", (0, (-1,), 2), (1,), NotMukaiVectorError),
        ("rank1-k3-l1", (1, (0,), 0), (1,), NonPositiveSquareError),
        ("elliptic-k3", (0, (1, 1), 1), (1, 5), NonPositiveSquareError),
        ("elliptic-k3", (0, (1, 2), 0), (1, 5), RankZeroDegenerateError),
        ("rank1-k3-l1", (1, (1,), 0), (2,), NotPrimitiveError),
        ("elliptic-k3", (1, (1, 0), -2), (1, 2), NotAmpleError),
        ("elliptic-k3", (2, (0, 0), -1), (1, 4), NotGenericError),
    ],
)
def test_make_triple_rejections(name: str, v: tuple, H: tuple, error: type) -> None:
    S = preset(name)
    with pytest.raises(error) as excinfo:
        make_triple(S, MukaiVector(v[0], DivisorClass(v[1]), v[2]), DivisorClass(H))
    assert excinfo.value.condition == error.condition


def test_not_generic_carries_a_witness() -> None:
    S = elliptic("K3")
    with pytest.raises(NotGenericError) as excinfo:
        make_triple(S, MukaiVector(2, S.zero(), -1), S.divisor(1, 4))
    assert excinfo.value.witness.D == S.divisor(1, -2)
    assert excinfo.value.witness.dsq == -6


def test_raw_triples_are_accepted_on_request() -> None:
    S = rank1("K3", 1)
    v = MukaiVector(0, S.divisor(-2), 12)
    with pytest.raises(NotMukaiVectorError):
        make_triple(S, v, S.divisor(1))
    t = make_triple(S, v, S.divisor(1), allow_raw=True)
    assert t.raw
    assert t.v == v
    assert (t.m, t.k) == (2, 1)
