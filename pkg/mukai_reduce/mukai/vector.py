"""
This module implements Mukai vectors on a surface, the Mukai pairing and the numerical
invariants attached to a Mukai vector.

Classes:
    MukaiVector: A triple (v0, v1, v2) with v1 a divisor class.

Functions:
    pairing(S, v, w) -> int:
        The Mukai pairing (v, w) = v1·w1 − v0·w2 − v2·w0.

    square(S, v) -> int:
        The Mukai square (v, v).

    is_mukai_vector(S, v) -> bool:
        Whether v is the Mukai vector of a (non-trivial) coherent sheaf.

    primitive_decomposition(v) -> tuple[int, MukaiVector]:
        Write v = m·w with w primitive.

    vector_of_sheaf(S, rank, c1, ch2) -> MukaiVector:
        Mukai vector of a sheaf with the given rank, first Chern class and ch₂.

    discriminant_bound(S, v) -> Fraction:
        The bound |v| = (v0²/4)·v² + v0^(2ε+2)/2.

    moduli_dims(m, k, kind) -> tuple[int, int | None]:
        Dimensions of M_v and, for Abelian surfaces, of K_v.

    auxiliary_vector(S, m) -> MukaiVector:
        The rank-0 vector (0, m·h, 1 − m²k) on a rank-1 surface with h² = 2k.

    canonicalize_sign(S, v) -> MukaiVector:
        Sign-canonical form of a raw vector.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

# Import user-defined modules
from mukai_reduce.lattice import (
    DivisorClass,
    Kind,
    SurfaceClass,
    intersect,
    is_effective,
)


# ==================================================================================================
# --- Exceptions
# ==================================================================================================
class MukaiError(ValueError):
    """Raised when an operation on Mukai vectors receives invalid data."""

    def __init__(self, message: str, condition: str = "mukai"):
        super().__init__(message)
        self.condition = condition


# ==================================================================================================
# --- Class
# ==================================================================================================
@dataclass(frozen=True)
class MukaiVector:
    """A Mukai vector (v0, v1, v2). Raw vectors may have any sign; is_mukai_vector tells
    which ones come from sheaves.

    Attributes:
        v0 (int): The rank component.
        v1 (DivisorClass): The divisor class component.
        v2 (int): The last component.
    """

    v0: int
    v1: DivisorClass
    v2: int

    def __post_init__(self):
        object.__setattr__(self, "v0", int(self.v0))
        object.__setattr__(self, "v2", int(self.v2))
        if not isinstance(self.v1, DivisorClass):
            object.__setattr__(self, "v1", DivisorClass(self.v1))

    def __mul__(self, factor: int) -> "MukaiVector":
        return MukaiVector(factor * self.v0, factor * self.v1, factor * self.v2)

    __rmul__ = __mul__

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.v0, -self.v1, -self.v2)

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.v0 + other.v0, self.v1 + other.v1, self.v2 + other.v2)

    def is_zero(self) -> bool:
        return self.v0 == 0 and self.v2 == 0 and self.v1.is_zero()

    def content(self) -> int:
        return math.gcd(self.v0, self.v1.content(), self.v2)

    def to_dic(self) -> dict[str, Any]:
        return {"v0": self.v0, "v1": self.v1.to_list(), "v2": self.v2}

    @classmethod
    def from_dic(cls, dic_vector: dict[str, Any]) -> "MukaiVector":
        try:
            return cls(int(dic_vector["v0"]), DivisorClass(dic_vector["v1"]), int(dic_vector["v2"]))
        except KeyError as e:
            raise MukaiError(f"Missing field {e} in Mukai vector", "format") from e
        except (TypeError, ValueError) as e:
            raise MukaiError(f"Malformed Mukai vector {dic_vector}: {e}", "format") from e

    def describe(self, S: SurfaceClass) -> str:
        return f"({self.v0}, {S.label(self.v1)}, {self.v2})"


# ==================================================================================================
# --- Functions
# ==================================================================================================
def _check_on_surface(S: SurfaceClass, *l_vectors: MukaiVector) -> None:
    for v in l_vectors:
        if len(v.v1) != S.ns_rank:
            raise MukaiError(
                f"Mukai vector with v1={v.v1.coords} does not live on {S.name}", "surface"
            )


def pairing(S: SurfaceClass, v: MukaiVector, w: MukaiVector) -> int:
    """Compute the Mukai pairing (v, w) = v1·w1 − v0·w2 − v2·w0.

    Args:
        S (SurfaceClass): The surface both vectors live on.
        v (MukaiVector): First vector.
        w (MukaiVector): Second vector.

    Raises:
        MukaiError: If a vector does not live on S.

    Returns:
        int: The pairing.
    """
    _check_on_surface(S, v, w)
    return intersect(S, v.v1, w.v1) - v.v0 * w.v2 - v.v2 * w.v0


def square(S: SurfaceClass, v: MukaiVector) -> int:
    return pairing(S, v, v)


def is_mukai_vector(S: SurfaceClass, v: MukaiVector) -> bool:
    """Whether v0 > 0, or v0 = 0 with v1 effective nonzero, or v0 = 0, v1 = 0 and v2 > 0."""
    _check_on_surface(S, v)
    if v.v0 > 0:
        return True
    if v.v0 < 0:
        return False
    if v.v1.is_zero():
        return v.v2 > 0
    return is_effective(S, v.v1)


def primitive_decomposition(v: MukaiVector) -> tuple[int, MukaiVector]:
    """Write v = m·w with m the content of v and w primitive.

    Args:
        v (MukaiVector): A nonzero vector.

    Raises:
        MukaiError: For the zero vector.

    Returns:
        tuple[int, MukaiVector]: m and w.
    """
    m = v.content()
    if m == 0:
        raise MukaiError("The zero vector has no primitive decomposition", "zero")
    return m, MukaiVector(v.v0 // m, v.v1.divide(m), v.v2 // m)


def vector_of_sheaf(S: SurfaceClass, rank: int, c1: DivisorClass, ch2: int) -> MukaiVector:
    """Mukai vector (rank, c1, ch2 + ε·rank) of a sheaf."""
    if rank < 0:
        raise MukaiError(f"The rank of a sheaf is nonnegative, got {rank}", "rank")
    v = MukaiVector(rank, c1, ch2 + S.epsilon * rank)
    _check_on_surface(S, v)
    return v


def discriminant_bound(S: SurfaceClass, v: MukaiVector) -> Fraction:
    """Compute |v| = (v0²/4)·v² + v0^(2ε+2)/2.

    Args:
        S (SurfaceClass): The surface.
        v (MukaiVector): A vector of positive rank.

    Raises:
        MukaiError: If v0 ≤ 0, as the bound is only defined in positive rank.

    Returns:
        Fraction: The exact bound.
    """
    if v.v0 <= 0:
        raise MukaiError(f"|v| is only defined for v0 > 0, got v0 = {v.v0}", "rank")
    return Fraction(v.v0**2, 4) * square(S, v) + Fraction(v.v0 ** (2 * S.epsilon + 2), 2)


def moduli_dims(m: int, k: int, kind: Kind | str) -> tuple[int, int | None]:
    """Dimensions of M_v (2m²k+2) and of K_v (2m²k−2, Abelian surfaces only).

    Args:
        m (int): The multiplicity, at least 1.
        k (int): Half the square of the primitive part, at least 1.
        kind (Kind | str): The kind of surface.

    Returns:
        tuple[int, int | None]: (dim M_v, dim K_v), the latter None for K3 surfaces.
    """
    kind = Kind.parse(kind)
    if m < 1 or k < 1:
        raise MukaiError(f"moduli_dims needs m, k >= 1, got m={m}, k={k}", "range")
    dim_M = 2 * m * m * k + 2
    dim_K = 2 * m * m * k - 2 if kind is Kind.ABELIAN else None
    return dim_M, dim_K


def auxiliary_vector(S: SurfaceClass, m: int) -> MukaiVector:
    """Return v' = (0, m·h, 1 − m²k) on a rank-1 surface with h² = 2k.

    Its square equals the square 2m²k of m(0, h, 0).
    """
    if S.ns_rank != 1:
        raise MukaiError(f"The auxiliary vector lives on rank-1 surfaces, not {S.name}", "rank")
    k = S.gram[0][0] // 2
    return MukaiVector(0, DivisorClass([m]), 1 - m * m * k)


def canonical_vector(S: SurfaceClass, m: int) -> MukaiVector:
    """Return u = m(0, h, 0) on a rank-1 surface."""
    if S.ns_rank != 1:
        raise MukaiError(f"The canonical vector lives on rank-1 surfaces, not {S.name}", "rank")
    return MukaiVector(0, DivisorClass([m]), 0)


def canonicalize_sign(S: SurfaceClass, v: MukaiVector) -> MukaiVector:
    """Bring a raw vector to sign-canonical form, preserving its square.

    (0, −ξ, a) with ξ effective becomes (0, ξ, a); a vector with v0 < 0 is negated. Other
    vectors are returned unchanged.
    """
    _check_on_surface(S, v)
    if v.v0 < 0:
        return -v
    if v.v0 == 0 and is_effective(S, -v.v1):
        return MukaiVector(0, -v.v1, v.v2)
    return v
