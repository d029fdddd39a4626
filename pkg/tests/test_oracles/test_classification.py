# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import third-party modules
import pytest

# Import user-defined modules
from mukai_reduce.lattice import Kind
from mukai_reduce.oracles import (
    OracleError,
    VarietyClass,
    albanese_dimension,
    betti_table,
    classify,
    codim_reducible,
    dim_linear_system,
    dimension_table,
    reflexive_form_dims,
)

# ==================================================================================================
# --- Dimension formulas
# ==================================================================================================


@pytest.mark.parametrize(
    "kind, k, p, expected", [("K3", 1, 1, 2), ("K3", 2, 3, 19), ("ab", 1, 1, 0), ("ab", 2, 3, 17)]
)
def test_dim_linear_system(kind: str, k: int, p: int, expected: int) -> None:
    assert dim_linear_system(kind, k, p) == expected


@pytest.mark.parametrize("m, k, expected", [(1, 1, None), (2, 1, 1), (2, 2, 3), (3, 1, 3), (4, 1, 5)])
def test_codim_reducible(m: int, k: int, expected: int | None) -> None:
    assert codim_reducible("K3", m, k) == expected
    assert codim_reducible("ab", m, k) == expected


def test_dimension_table() -> None:
    df = dimension_table(6, 6)
    assert len(df) == 2 * 6 * 6
    df_small = df[~df["codim_at_least_2"]]
    assert set(zip(df_small["m"], df_small["k"])) == {(2, 1)}
    row = df[(df["kind"] == "Abelian") & (df["m"] == 2) & (df["k"] == 1)].iloc[0]
    assert (row["dim_M"], row["dim_K"], row["dim_mH"]) == (10, 6, 3)
    assert df[df["kind"] == "K3"]["dim_K"].isna().all()


def test_dimension_table_needs_positive_bounds() -> None:
    with pytest.raises(OracleError):
        dimension_table(0, 3)


@pytest.mark.parametrize("p, expected", [(0, 1), (1, 0), (2, 1), (3, 0), (4, 1)])
def test_reflexive_form_dims(p: int, expected: int) -> None:
    assert reflexive_form_dims(1, 1, p) == expected


def test_reflexive_form_dims_range() -> None:
    # dim M_v = 4 for (m, k) = (1, 1) on a K3 surface, dim K_v = 6 for (2, 1) on an Abelian one
    with pytest.raises(OracleError):
        reflexive_form_dims(1, 1, 5)
    assert reflexive_form_dims(2, 1, 6, Kind.ABELIAN) == 1
    with pytest.raises(OracleError):
        reflexive_form_dims(2, 1, 7, Kind.ABELIAN)


# ==================================================================================================
# --- Classification
# ==================================================================================================


@pytest.mark.parametrize("k", range(1, 5))
def test_hilbert_schemes(k: int) -> None:
    report = classify("K3", 1, k)
    assert report.variety_class is VarietyClass.IHS_MANIFOLD
    assert report.deformation_label == f"Hilb^{k + 1}"
    assert report.b2 == 23
    assert report.beauville_signature == (3, 20)
    assert report.smooth


def test_ogrady_ten() -> None:
    report = classify("K3", 2, 1)
    assert report.variety_class is VarietyClass.IRREDUCIBLE_SYMPLECTIC_VARIETY
    assert report.deformation_label == "OG10"
    assert report.b2 == 24
    assert report.has_symplectic_resolution
    assert not report.smooth
    assert report.dim_M == 10


def test_ogrady_six() -> None:
    report = classify("ab", 2, 1)
    assert report.deformation_label == "OG6"
    assert report.pi1["K^s_v"] == "Z/2Z"
    assert report.b2 == 8
    assert report.beauville_signature == (3, 5)
    assert (report.dim_M, report.dim_K) == (10, 6)
    assert report.albanese_dimension == 4


def test_singular_without_resolution() -> None:
    report = classify("K3", 3, 2)
    assert report.variety_class is VarietyClass.IRREDUCIBLE_SYMPLECTIC_VARIETY
    assert not report.has_symplectic_resolution
    assert report.b2 is None
    assert "terminal singularities" in report.notes


@pytest.mark.parametrize("m", range(2, 5))
def test_isotropic_vectors(m: int) -> None:
    report = classify("K3", m, 0)
    assert report.deformation_label == f"Sym^{m}"
    assert VarietyClass.NAMIKAWA_NOT_IRREDUCIBLE in report.classes
    assert classify("K3", 1, 0).variety_class is VarietyClass.K3_SURFACE


def test_abelian_small_cases() -> None:
    report = classify("ab", 1, 1)
    assert report.variety_class is VarietyClass.POINT
    assert report.m_classes == (VarietyClass.ABELIAN_FOURFOLD,)
    assert classify("ab", 1, 2).variety_class is VarietyClass.K3_SURFACE
    assert classify("ab", 1, 3).deformation_label == "Kum^2"
    assert classify("ab", 1, 3).b2 == 7
    assert classify("ab", 3, 0).m_classes == (VarietyClass.SYMMETRIC_PRODUCT,)


@pytest.mark.parametrize(
    "kind, k, expected",
    [
        ("K3", -1, VarietyClass.POINT),
        ("K3", -2, VarietyClass.EMPTY),
        ("ab", -1, VarietyClass.EMPTY),
    ],
)
def test_negative_squares(kind: str, k: int, expected: VarietyClass) -> None:
    report = classify(kind, 1, k)
    assert report.variety_class is expected
    assert report.to_dic()["variety_class"] == expected.value


def test_classify_needs_positive_multiplicity() -> None:
    with pytest.raises(OracleError):
        classify("K3", 0, 1)


def test_betti_table() -> None:
    df = betti_table()
    assert list(df["b2"]) == [22, 23, 7, 8, 24]
    assert df["beauville_signature"].iloc[-1] == (3, 21)
    assert albanese_dimension("K3") == 0
    assert albanese_dimension("ab") == 4
