# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import third-party modules
import pytest

# Import user-defined modules
from mukai_reduce.lattice import (
    DivisorClass,
    Kind,
    LatticeError,
    SurfaceClass,
    effective_classes_below,
    effective_coefficients,
    elliptic,
    intersect,
    is_ample,
    is_effective,
    is_preset,
    load_surface_from_path,
    orthogonal_generator,
    preset,
    primitive_part,
    rank1,
    square,
    surface_from_dic,
    surface_from_json_value,
    surface_to_json_value,
)
from mukai_reduce.utils import path_asset

# ==================================================================================================
# --- Presets
# ==================================================================================================


def test_elliptic_k3_intersection_form() -> None:
    S = elliptic("K3")
    sigma, f = S.divisor(1, 0), S.divisor(0, 1)
    assert square(S, sigma) == -2
    assert intersect(S, sigma, f) == 1
    assert square(S, f) == 0
    assert S.epsilon == 1
    assert S.is_elliptic()


def test_elliptic_abelian_intersection_form() -> None:
    S = elliptic("ab")
    sigma, f = S.divisor(1, 0), S.divisor(0, 1)
    assert square(S, sigma) == 0
    assert intersect(S, sigma, f) == 1
    assert S.epsilon == 0
    assert S.kind is Kind.ABELIAN


@pytest.mark.parametrize(
    "name, kind, gram",
    [
        ("rank1-k3-l1", Kind.K3, ((2,),)),
        ("rank1-ab-l3", Kind.ABELIAN, ((6,),)),
        ("elliptic-k3", Kind.K3, ((-2, 1), (1, 0))),
        ("elliptic-ab", Kind.ABELIAN, ((0, 1), (1, 0))),
    ],
)
def test_preset_names(name: str, kind: Kind, gram: tuple) -> None:
    S = preset(name)
    assert S.name == name
    assert S.kind is kind
    assert S.gram == gram
    assert is_preset(S)


@pytest.mark.parametrize("name", ["rank1-k3-l0", "rank1-xx-l2", "elliptic", ""])
def test_unknown_preset(name: str) -> None:
    with pytest.raises(LatticeError):
        preset(name)


def test_rank1_preset() -> None:
    S = rank1(Kind.K3, 3)
    assert S.name == "rank1-k3-l3"
    assert S.ns_rank == 1
    assert square(S, S.divisor(1)) == 6
    assert not S.is_elliptic()


# ==================================================================================================
# --- Validation of the Gram matrix
# ==================================================================================================


@pytest.mark.parametrize(
    "gram, condition",
    [
        (((2, 0, 0), (0, -2, 0), (0, 0, -2)), "rank"),
        (((2, 1), (0, -2)), "gram"),
        (((1, 0), (0, -2)), "gram"),
        (((2, 0), (0, 2)), "gram"),
        (((0, 0), (0, 0)), "gram"),
        (((-2,),), "gram"),
    ],
)
def test_invalid_gram(gram: tuple, condition: str) -> None:
    with pytest.raises(LatticeError) as excinfo:
        SurfaceClass(
            name="bad",
            kind=Kind.K3,
            gram=gram,
            basis_labels=tuple(f"e{i}" for i in range(len(gram))),
            ample_ref=DivisorClass([1] * len(gram)),
        )
    assert excinfo.value.condition == condition


def test_ample_ref_must_have_positive_square() -> None:
    with pytest.raises(LatticeError) as excinfo:
        SurfaceClass(
            name="bad",
            kind=Kind.K3,
            gram=((-2, 1), (1, 0)),
            basis_labels=("sigma", "f"),
            ample_ref=DivisorClass([0, 1]),
        )
    assert excinfo.value.condition == "ample_ref"


# ==================================================================================================
# --- Divisor classes
# ==================================================================================================


def test_divisor_arithmetic() -> None:
    D, E = DivisorClass([1, 3]), DivisorClass([2, -1])
    assert D + E == DivisorClass([3, 2])
    assert D - E == DivisorClass([-1, 4])
    assert -D == DivisorClass([-1, -3])
    assert 3 * D == DivisorClass([3, 9])
    assert D * 2 == DivisorClass([2, 6])
    assert DivisorClass([4, -6]).content() == 2
    assert primitive_part(DivisorClass([4, -6])) == DivisorClass([2, -3])


def test_divide_requires_divisibility() -> None:
    with pytest.raises(LatticeError) as excinfo:
        DivisorClass([2, 3]).divide(2)
    assert excinfo.value.condition == "divisibility"


@pytest.mark.parametrize(
    "coords, label",
    [((1, 3), "sigma+3f"), ((-1, 3), "-sigma+3f"), ((1, -3), "sigma-3f"), ((0, 0), "0")],
)
def test_label(coords: tuple[int, int], label: str) -> None:
    assert elliptic("K3").label(DivisorClass(coords)) == label


# ==================================================================================================
# --- Ample and effective cones
# ==================================================================================================


@pytest.mark.parametrize(
    "name, coords, ample",
    [
        ("elliptic-k3", (1, 5), True),
        ("elliptic-k3", (1, 3), True),
        ("elliptic-k3", (1, 2), False),
        ("elliptic-k3", (0, 1), False),
        ("elliptic-ab", (1, 1), True),
        ("elliptic-ab", (1, 0), False),
        ("elliptic-ab", (-1, -1), False),
        ("rank1-k3-l2", (1,), True),
        ("rank1-k3-l2", (-2,), False),
    ],
)
def test_is_ample(name: str, coords: tuple[int, ...], ample: bool) -> None:
    S = preset(name)
    assert is_ample(S, DivisorClass(coords)) is ample


def test_effective_coefficients() -> None:
    S = elliptic("K3")
    assert effective_coefficients(S, S.divisor(1, 3)) == (1, 3)
    assert effective_coefficients(S, S.divisor(0, 0)) == (0, 0)
    assert effective_coefficients(S, S.divisor(-1, 3)) is None
    assert is_effective(S, S.divisor(0, 2))
    assert not is_effective(S, S.zero())


def test_effective_classes_below() -> None:
    S = rank1("K3", 1)
    assert effective_classes_below(S, S.divisor(1), 4) == [S.divisor(1)]
    assert effective_classes_below(S, S.divisor(1), 2) == []

    Y = elliptic("ab")
    l_classes = effective_classes_below(Y, Y.divisor(2, 5), 7)
    assert set(C.coords for C in l_classes) == {(0, 1), (0, 2), (0, 3), (1, 0)}


# ==================================================================================================
# --- Orthogonal generator
# ==================================================================================================


@pytest.mark.parametrize(
    "name, H, D0, D0_square",
    [
        ("elliptic-k3", (1, 5), (1, -3), -8),
        ("elliptic-ab", (1, 1), (1, -1), -2),
        ("elliptic-ab", (2, 5), (2, -5), -20),
    ],
)
def test_orthogonal_generator(
    name: str, H: tuple[int, int], D0: tuple[int, int], D0_square: int
) -> None:
    S = preset(name)
    generator = orthogonal_generator(S, DivisorClass(H))
    assert generator == DivisorClass(D0)
    assert square(S, generator) == D0_square
    assert intersect(S, generator, DivisorClass(H)) == 0


def test_orthogonal_generator_needs_rank_two() -> None:
    with pytest.raises(LatticeError) as excinfo:
        orthogonal_generator(rank1("K3", 1), DivisorClass([1]))
    assert excinfo.value.condition == "rank"


# ==================================================================================================
# --- Surface files
# ==================================================================================================


def test_load_toml_surface() -> None:
    S = load_surface_from_path(path_asset("surfaces", "elliptic_k3.toml"))
    assert S.name == "elliptic-k3-file"
    assert S.gram == elliptic("K3").gram
    assert S.effective_gens == elliptic("K3").effective_gens
    # Same data but another name: not the preset
    assert not is_preset(S)
    assert surface_to_json_value(S)["gram"] == [[-2, 1], [1, 0]]


def test_load_yaml_surface() -> None:
    S = load_surface_from_path(path_asset("surfaces", "rank1_abelian_l2.yaml"))
    assert S.kind is Kind.ABELIAN
    assert S.gram == ((4,),)
    assert S.gram == rank1("ab", 2).gram


def test_surface_json_value_uses_preset_names() -> None:
    S = elliptic("K3")
    assert surface_to_json_value(S) == "elliptic-k3"
    assert surface_from_json_value("elliptic-k3") == S


def test_surface_missing_field() -> None:
    with pytest.raises(LatticeError) as excinfo:
        surface_from_dic({"kind": "K3", "gram": [[2]], "basis_labels": ["h"]})
    assert excinfo.value.condition == "ample_ref"


def test_surface_unknown_extension(tmp_path) -> None:
    path = tmp_path / "surface.txt"
    path.write_text("gram = [[2]]")
    with pytest.raises(LatticeError) as excinfo:
        load_surface_from_path(str(path))
    assert excinfo.value.condition == "format"
