"""
This module contains the table of known facts on the moduli spaces M_v and, for Abelian
surfaces, on the Albanese fiber K_v, as functions of the kind of surface and of (m, k).

Classes:
    VarietyClass: The classes of varieties met.
    ClassificationReport: The facts attached to (kind, m, k).

Functions:
    classify(kind, m, k) -> ClassificationReport
    betti_table() -> pd.DataFrame
    beauville_signature(b2) -> tuple[int, int]
    albanese_dimension(kind) -> int
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

# Third party imports
import pandas as pd

# Local imports
from mukai_reduce.lattice import Kind
from mukai_reduce.mukai import moduli_dims

from .numerics import OracleError

# Second Betti numbers of the known deformation classes
BETTI_NUMBERS = {"K3": 22, "Hilb": 23, "Kum": 7, "OG6": 8, "OG10": 24}
TRIVIAL = "trivial"
TERMINAL = "terminal singularities"


class VarietyClass(str, Enum):
    EMPTY = "Empty"
    POINT = "Point"
    K3_SURFACE = "K3Surface"
    ABELIAN_FOURFOLD = "AbelianFourfold"
    SYMMETRIC_PRODUCT = "SymmetricProduct"
    IHS_MANIFOLD = "IHSManifold"
    IRREDUCIBLE_SYMPLECTIC_VARIETY = "IrreducibleSymplecticVariety"
    NAMIKAWA_NOT_IRREDUCIBLE = "NamikawaNotIrreducible"


@dataclass(frozen=True)
class ClassificationReport:
    """Facts on M_v (K3) or on K_v (Abelian) for a vector v = m·w with w² = 2k.

    Attributes:
        kind (Kind): The kind of surface.
        m (int): The multiplicity.
        k (int): Half the square of w, of any sign.
        dim_M (int | None): Dimension of M_v, None when empty.
        dim_K (int | None): Dimension of K_v, Abelian surfaces only.
        smooth (bool): Whether the described variety is smooth.
        has_symplectic_resolution (bool): Whether the singular variety admits one.
        classes (tuple[VarietyClass, ...]): The classes of the described variety: M_v on K3
            surfaces, K_v (or the fiber of the sum morphism when k = 0) on Abelian ones.
        m_classes (tuple[VarietyClass, ...]): The classes of M_v.
        deformation_label (str): The deformation type, e.g. "Hilb^3", "OG6", "Sym^2".
        pi1 (dict[str, str]): Fundamental groups, by space.
        b2 (int | None): Second Betti number, when known.
        beauville_signature (tuple[int, int] | None): Signature of the Beauville form.
        albanese_dimension (int): Dimension of the Albanese variety of M_v.
        notes (tuple[str, ...]): Further facts.
    """

    kind: Kind
    m: int
    k: int
    dim_M: int | None
    dim_K: int | None
    smooth: bool
    has_symplectic_resolution: bool
    classes: tuple[VarietyClass, ...]
    m_classes: tuple[VarietyClass, ...]
    deformation_label: str
    pi1: dict[str, str] = field(default_factory=dict)
    b2: int | None = None
    beauville_signature: tuple[int, int] | None = None
    albanese_dimension: int = 0
    notes: tuple[str, ...] = ()

    @property
    def variety_class(self) -> VarietyClass:
        return self.classes[0]

    def to_dic(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "m": self.m,
            "k": self.k,
            "dim_M": self.dim_M,
            "dim_K": self.dim_K,
            "smooth": self.smooth,
            "has_symplectic_resolution": self.has_symplectic_resolution,
            "variety_class": self.variety_class.value,
            "classes": [c.value for c in self.classes],
            "m_classes": [c.value for c in self.m_classes],
            "deformation_label": self.deformation_label,
            "pi1": dict(self.pi1),
            "b2": self.b2,
            "beauville_signature": list(self.beauville_signature)
            if self.beauville_signature
            else None,
            "albanese_dimension": self.albanese_dimension,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        return "\n".join(f"{key:<26}{value}" for key, value in self.to_dic().items()) + "\n"


# ==================================================================================================
# --- Facts
# ==================================================================================================
def beauville_signature(b2: int) -> tuple[int, int]:
    if b2 < 3:
        raise OracleError(f"b2 = {b2} is too small for a Beauville form")
    return 3, b2 - 3


def albanese_dimension(kind: Kind | str) -> int:
    """The Albanese of M_v is S × Ŝ for Abelian surfaces and a point for K3 surfaces."""
    return 4 if Kind.parse(kind) is Kind.ABELIAN else 0


def betti_table() -> pd.DataFrame:
    l_rows = [
        {"label": "K3", "dimension": "2", "b2": BETTI_NUMBERS["K3"]},
        {"label": "Hilb^n(K3)", "dimension": "2n", "b2": BETTI_NUMBERS["Hilb"]},
        {"label": "Kum^n", "dimension": "2n", "b2": BETTI_NUMBERS["Kum"]},
        {"label": "OG6", "dimension": "6", "b2": BETTI_NUMBERS["OG6"]},
        {"label": "OG10", "dimension": "10", "b2": BETTI_NUMBERS["OG10"]},
    ]
    df = pd.DataFrame(l_rows)
    df["beauville_signature"] = [beauville_signature(b2) for b2 in df["b2"]]
    return df


def _report(kind: Kind, m: int, k: int, **kwargs: Any) -> ClassificationReport:
    b2 = kwargs.get("b2")
    kwargs.setdefault("m_classes", kwargs["classes"])
    kwargs.setdefault("albanese_dimension", albanese_dimension(kind) if k >= 1 else 0)
    kwargs.setdefault("dim_K", None)
    kwargs.setdefault("has_symplectic_resolution", False)
    return ClassificationReport(
        kind=kind,
        m=m,
        k=k,
        beauville_signature=beauville_signature(b2) if b2 is not None else None,
        **kwargs,
    )


def _classify_k3(m: int, k: int) -> ClassificationReport:
    kind = Kind.K3
    if k < -1:
        return _report(
            kind, m, k, dim_M=None, smooth=False, classes=(VarietyClass.EMPTY,),
            deformation_label="empty",
        )
    if k == -1:
        return _report(
            kind, m, k, dim_M=0, smooth=True, classes=(VarietyClass.POINT,),
            deformation_label="point",
        )
    if k == 0 and m == 1:
        return _report(
            kind, m, k, dim_M=2, smooth=True, classes=(VarietyClass.K3_SURFACE,),
            deformation_label="K3", b2=BETTI_NUMBERS["K3"], pi1={"M_v": TRIVIAL},
        )
    if k == 0:
        return _report(
            kind, m, k, dim_M=2 * m, smooth=False,
            classes=(VarietyClass.SYMMETRIC_PRODUCT, VarietyClass.NAMIKAWA_NOT_IRREDUCIBLE),
            deformation_label=f"Sym^{m}", notes=("M_v = Sym^m(M_w), M_w a K3 surface",),
        )

    dim_M, _ = moduli_dims(m, k, kind)
    pi1 = {"M_v": TRIVIAL, "M^s_v": TRIVIAL}
    if m == 1:
        return _report(
            kind, m, k, dim_M=dim_M, smooth=True, classes=(VarietyClass.IHS_MANIFOLD,),
            deformation_label=f"Hilb^{k + 1}", b2=BETTI_NUMBERS["Hilb"], pi1=pi1,
        )
    if (m, k) == (2, 1):
        return _report(
            kind, m, k, dim_M=dim_M, smooth=False, has_symplectic_resolution=True,
            classes=(VarietyClass.IRREDUCIBLE_SYMPLECTIC_VARIETY,), deformation_label="OG10",
            b2=BETTI_NUMBERS["OG10"], pi1=pi1,
            notes=("the symplectic resolution is deformation equivalent to OG10",),
        )
    return _report(
        kind, m, k, dim_M=dim_M, smooth=False,
        classes=(VarietyClass.IRREDUCIBLE_SYMPLECTIC_VARIETY,),
        deformation_label=f"M_({m},{k})", pi1=pi1, notes=(TERMINAL,),
    )


def _classify_abelian(m: int, k: int) -> ClassificationReport:
    kind = Kind.ABELIAN
    if k < 0:
        return _report(
            kind, m, k, dim_M=None, smooth=False, classes=(VarietyClass.EMPTY,),
            deformation_label="empty",
        )
    if k == 0:
        # K side: fiber of the sum morphism Sym^m(M_w) → M_w
        fiber = (VarietyClass.POINT,) if m == 1 else (VarietyClass.NAMIKAWA_NOT_IRREDUCIBLE,)
        return _report(
            kind, m, k, dim_M=2 * m, dim_K=2 * m - 2, smooth=m == 1, classes=fiber,
            m_classes=(VarietyClass.SYMMETRIC_PRODUCT,), deformation_label=f"Sym^{m}",
            albanese_dimension=2,
            notes=("M_v = Sym^m(M_w), M_w an Abelian surface", "M_v is not Namikawa symplectic"),
        )

    dim_M, dim_K = moduli_dims(m, k, kind)
    pi1 = {"K_v": TRIVIAL, "K^s_v": TRIVIAL}
    if (m, k) == (1, 1):
        return _report(
            kind, m, k, dim_M=dim_M, dim_K=dim_K, smooth=True, classes=(VarietyClass.POINT,),
            m_classes=(VarietyClass.ABELIAN_FOURFOLD,), deformation_label="point",
            notes=("M_v = S × Ŝ",),
        )
    if (m, k) == (1, 2):
        return _report(
            kind, m, k, dim_M=dim_M, dim_K=dim_K, smooth=True,
            classes=(VarietyClass.K3_SURFACE,), m_classes=(), deformation_label="K3",
            b2=BETTI_NUMBERS["K3"], pi1=pi1,
        )
    if m == 1:
        return _report(
            kind, m, k, dim_M=dim_M, dim_K=dim_K, smooth=True,
            classes=(VarietyClass.IHS_MANIFOLD,), m_classes=(),
            deformation_label=f"Kum^{k - 1}", b2=BETTI_NUMBERS["Kum"], pi1=pi1,
        )
    if (m, k) == (2, 1):
        return _report(
            kind, m, k, dim_M=dim_M, dim_K=dim_K, smooth=False, has_symplectic_resolution=True,
            classes=(VarietyClass.IRREDUCIBLE_SYMPLECTIC_VARIETY,), m_classes=(),
            deformation_label="OG6", b2=BETTI_NUMBERS["OG6"],
            pi1={"K_v": TRIVIAL, "K^s_v": "Z/2Z"},
            notes=("the symplectic resolution is deformation equivalent to OG6",),
        )
    return _report(
        kind, m, k, dim_M=dim_M, dim_K=dim_K, smooth=False,
        classes=(VarietyClass.IRREDUCIBLE_SYMPLECTIC_VARIETY,), m_classes=(),
        deformation_label=f"K_({m},{k})", pi1=pi1, notes=(TERMINAL,),
    )


def classify(kind: Kind | str, m: int, k: int) -> ClassificationReport:
    """Collect the known facts on the moduli space of a vector m·w with w² = 2k.

    Args:
        kind (Kind | str): The kind of surface.
        m (int): The multiplicity, at least 1.
        k (int): Half the square of w. Non-positive values are accepted.

    Raises:
        OracleError: If m < 1.

    Returns:
        ClassificationReport: The facts.
    """
    if m < 1:
        raise OracleError(f"classify needs m >= 1, got m={m}")
    if Kind.parse(kind) is Kind.K3:
        return _classify_k3(m, k)
    return _classify_abelian(m, k)
