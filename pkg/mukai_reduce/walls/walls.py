"""
This module decides v-genericity of polarizations, lists the v-walls crossing a segment of
polarizations, decides v-suitability on the elliptic presets and computes the M_d threshold
used by the rank-0 Fourier-Mukai duality.

Classes:
    Wall: A v-wall D^⊥, with the divisor D defining it.
    Suitability: Outcome of the one-sided suitability criterion.

Functions:
    is_generic(S, v, H) -> tuple[bool, Wall | None]:
        Whether H lies on no v-wall, with a witness wall otherwise.

    walls_between(S, v, H1, H2) -> list[Wall]:
        All v-walls meeting the segment [H1, H2].

    same_chamber(S, v, H1, H2) -> bool:
        Whether H1 and H2 are generic and no wall separates them.

    is_suitable(S, v, H) -> Suitability:
        Sufficient criterion for H = σ + tf to be v-suitable.

    threshold_Md(S, H, d) -> Fraction | float:
        max of d(C²+2)/(2C·H) over effective classes with 0 < C·H < d.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

# Import user-defined modules
from mukai_reduce.lattice import (
    DivisorClass,
    SurfaceClass,
    are_proportional,
    effective_classes_below,
    effective_coefficients,
    intersect,
    is_ample,
    normalize_sign,
    orthogonal_generator,
    primitive_part,
)
from mukai_reduce.lattice import square as divisor_square
from mukai_reduce.mukai.vector import MukaiVector, discriminant_bound, is_mukai_vector

NO_CURVES = float("-inf")


# ==================================================================================================
# --- Exceptions and types
# ==================================================================================================
class WallError(ValueError):
    """Raised for unsupported wall computations."""

    def __init__(self, message: str, condition: str = "walls"):
        super().__init__(message)
        self.condition = condition


class Provenance(str, Enum):
    RANK_POSITIVE_BOUND = "RankPositiveBound"
    RANK_ZERO_PAIR = "RankZeroPair"


class Suitability(str, Enum):
    SUITABLE = "suitable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Wall:
    """A v-wall D^⊥.

    Attributes:
        D (DivisorClass): The defining divisor. Rank-positive walls use the primitive divisor with
            first nonzero coordinate positive; rank-0 walls keep D = u2·v1 − v2·u1.
        dsq (int): D².
        provenance (Provenance): How the wall was found.
        u1 (DivisorClass | None): First Chern class of the sub-vector, rank-0 walls only.
        u2 (int | None): Last component of the sub-vector, rank-0 walls only.
    """

    D: DivisorClass
    dsq: int
    provenance: Provenance
    u1: DivisorClass | None = None
    u2: int | None = None

    @property
    def key(self) -> tuple[int, ...]:
        """Coordinates of the normalized primitive divisor, identifying the hyperplane."""
        return normalize_sign(primitive_part(self.D)).coords

    def to_dic(self) -> dict[str, Any]:
        dic_wall: dict[str, Any] = {
            "D": self.D.to_list(),
            "dsq": self.dsq,
            "provenance": self.provenance.value,
        }
        if self.provenance is Provenance.RANK_ZERO_PAIR:
            dic_wall["u1"] = self.u1.to_list() if self.u1 is not None else None
            dic_wall["u2"] = self.u2
        return dic_wall


# ==================================================================================================
# --- Preconditions
# ==================================================================================================
def _check_wall_problem(S: SurfaceClass, v: MukaiVector, l_polarizations: list[DivisorClass]):
    if S.ns_rank > 2:
        raise WallError(f"Picard rank {S.ns_rank} is not supported", "rank")
    for H in l_polarizations:
        if len(H) != S.ns_rank or not is_ample(S, H):
            raise WallError(f"{H.coords} is not an ample class of {S.name}", "ample")
    if not is_mukai_vector(S, v):
        raise WallError(f"{v.describe(S)} is not a Mukai vector", "mukai vector")
    if S.ns_rank > 1 and v.v0 == 0 and v.v2 == 0:
        raise WallError(
            f"Vectors of the form (0, v1, 0) are not supported on {S.name}", "zero case"
        )


def _l_subclasses(S: SurfaceClass, v1: DivisorClass) -> list[DivisorClass]:
    """Classes u1 with u1 and v1 − u1 effective-or-zero, not proportional to v1, in
    lexicographic order of their coefficients on the effective generators."""
    coefficients = effective_coefficients(S, v1)
    if coefficients is None:
        return []
    l_gens = [E for E in S.effective_gens if not E.is_zero()]
    c0, c1 = coefficients
    l_u1 = []
    for a0 in range(c0 + 1):
        for a1 in range(c1 + 1):
            u1 = a0 * l_gens[0] + a1 * l_gens[1]
            if u1.is_zero() or are_proportional(u1, v1):
                continue
            l_u1.append(u1)
    return l_u1


def wall_of_pair(S: SurfaceClass, v: MukaiVector, u1: DivisorClass, u2: int) -> Wall:
    """The rank-0 wall attached to the sub-vector u = (0, u1, u2) of v = (0, v1, v2)."""
    D = u2 * v.v1 - v.v2 * u1
    return Wall(D=D, dsq=divisor_square(S, D), provenance=Provenance.RANK_ZERO_PAIR, u1=u1, u2=u2)


# ==================================================================================================
# --- Genericity
# ==================================================================================================
def is_generic(S: SurfaceClass, v: MukaiVector, H: DivisorClass) -> tuple[bool, Wall | None]:
    """Decide whether H is v-generic.

    Args:
        S (SurfaceClass): The surface.
        v (MukaiVector): A Mukai vector, not of the form (0, v1, 0) on rank-2 surfaces.
        H (DivisorClass): An ample class.

    Raises:
        WallError: For unsupported inputs.

    Returns:
        tuple[bool, Wall | None]: The decision, and a wall containing H when it is not generic.
    """
    _check_wall_problem(S, v, [H])
    if S.ns_rank == 1:
        return True, None

    if v.v0 > 0:
        # W_v ∩ H^⊥ is spanned by D₀, and b²D₀² ≥ −|v| holds for some b ≥ 1 iff it holds for b = 1
        D0 = orthogonal_generator(S, H)
        D0_square = divisor_square(S, D0)
        if D0_square >= -discriminant_bound(S, v):
            return False, Wall(D=D0, dsq=D0_square, provenance=Provenance.RANK_POSITIVE_BOUND)
        return True, None

    v1_H = intersect(S, v.v1, H)
    for u1 in _l_subclasses(S, v.v1):
        numerator = v.v2 * intersect(S, u1, H)
        if numerator % v1_H:
            continue
        wall = wall_of_pair(S, v, u1, numerator // v1_H)
        if not wall.D.is_zero():
            return False, wall
    return True, None


# ==================================================================================================
# --- Walls across a segment
# ==================================================================================================
def _walls_between_rank_zero(
    S: SurfaceClass, v: MukaiVector, H1: DivisorClass, H2: DivisorClass
) -> list[Wall]:
    l_walls = []
    v1_H1 = intersect(S, v.v1, H1)
    v1_H2 = intersect(S, v.v1, H2)
    for u1 in _l_subclasses(S, v.v1):
        # D·Hi has the sign of u2 − rho_i
        rho_1 = Fraction(v.v2 * intersect(S, u1, H1), v1_H1)
        rho_2 = Fraction(v.v2 * intersect(S, u1, H2), v1_H2)
        for u2 in range(math.ceil(min(rho_1, rho_2)), math.floor(max(rho_1, rho_2)) + 1):
            wall = wall_of_pair(S, v, u1, u2)
            if not wall.D.is_zero():
                l_walls.append(wall)
    return l_walls


def _walls_between_rank_positive(
    S: SurfaceClass, v: MukaiVector, H1: DivisorClass, H2: DivisorClass
) -> list[Wall]:
    bound = discriminant_bound(S, v)

    if are_proportional(H1, H2):
        D0 = orthogonal_generator(S, H1)
        D0_square = divisor_square(S, D0)
        if D0_square >= -bound:
            return [Wall(D=D0, dsq=D0_square, provenance=Provenance.RANK_POSITIVE_BOUND)]
        return []

    # Work with c = (D·H1, D·H2), c1 ≥ 0 ≥ c2. Then −D² = N(c)/|det A| with A the Gram matrix
    # of (H1, H2) and N(c) = H2²c1² − 2(H1·H2)c1c2 + H1²c2².
    s11, s12, s22 = divisor_square(S, H1), intersect(S, H1, H2), divisor_square(S, H2)
    det_A = abs(s11 * s22 - s12 * s12)
    threshold = math.floor(bound * det_A)
    a1 = [intersect(S, E, H1) for E in (S.divisor(1, 0), S.divisor(0, 1))]
    a2 = [intersect(S, E, H2) for E in (S.divisor(1, 0), S.divisor(0, 1))]
    det_M = a1[0] * a2[1] - a1[1] * a2[0]

    l_walls = []
    c1_max = math.isqrt(threshold // s22) + 1
    for c1 in range(0, c1_max + 1):
        # Roots in c2 of H1²c2² − 2(H1·H2)c1c2 + H2²c1² − threshold
        discriminant = (s12 * c1) ** 2 - s11 * (s22 * c1 * c1 - threshold)
        if discriminant < 0:
            continue
        root = math.isqrt(discriminant)
        c2_low = (s12 * c1 - root - 1) // s11
        c2_high = min(0, -((-(s12 * c1 + root + 1)) // s11))
        for c2 in range(c2_low, c2_high + 1):
            if c1 == 0 and c2 == 0:
                continue
            if s22 * c1 * c1 - 2 * s12 * c1 * c2 + s11 * c2 * c2 > threshold:
                continue
            x_num = a2[1] * c1 - a1[1] * c2
            y_num = -a2[0] * c1 + a1[0] * c2
            if x_num % det_M or y_num % det_M:
                continue
            D = DivisorClass([x_num // det_M, y_num // det_M])
            # Multiples define the same wall as their primitive part
            if D.content() != 1:
                continue
            D = normalize_sign(D)
            l_walls.append(
                Wall(D=D, dsq=divisor_square(S, D), provenance=Provenance.RANK_POSITIVE_BOUND)
            )
    return l_walls


def walls_between(
    S: SurfaceClass, v: MukaiVector, H1: DivisorClass, H2: DivisorClass
) -> list[Wall]:
    """List the v-walls meeting the segment [H1, H2], endpoints included.

    Args:
        S (SurfaceClass): A rank-2 surface.
        v (MukaiVector): The Mukai vector.
        H1 (DivisorClass): First ample class.
        H2 (DivisorClass): Second ample class.

    Raises:
        WallError: On rank-1 surfaces and for unsupported inputs.

    Returns:
        list[Wall]: One wall per hyperplane, sorted by normalized primitive coordinates.
    """
    if S.ns_rank != 2:
        raise WallError(f"walls_between needs a rank-2 surface, got {S.name}", "rank")
    _check_wall_problem(S, v, [H1, H2])

    if v.v0 > 0:
        l_walls = _walls_between_rank_positive(S, v, H1, H2)
    else:
        l_walls = _walls_between_rank_zero(S, v, H1, H2)

    dic_walls: dict[tuple[int, ...], Wall] = {}
    for wall in l_walls:
        dic_walls.setdefault(wall.key, wall)
    logging.debug(f"{len(dic_walls)} walls between {H1.coords} and {H2.coords} for {v.to_dic()}")
    return [dic_walls[key] for key in sorted(dic_walls)]


def same_chamber(S: SurfaceClass, v: MukaiVector, H1: DivisorClass, H2: DivisorClass) -> bool:
    """Whether H1 and H2 are v-generic and lie in the same v-chamber."""
    if not (is_generic(S, v, H1)[0] and is_generic(S, v, H2)[0]):
        return False
    if S.ns_rank == 1:
        return True
    return not walls_between(S, v, H1, H2)


# ==================================================================================================
# --- Suitability and thresholds
# ==================================================================================================
def is_suitable(S: SurfaceClass, v: MukaiVector, H: DivisorClass) -> Suitability:
    """One-sided suitability criterion for H = σ + tf on the elliptic presets.

    Args:
        S (SurfaceClass): An elliptic preset.
        v (MukaiVector): A vector of positive rank.
        H (DivisorClass): The class σ + tf.

    Raises:
        WallError: If S is not elliptic, H is not of the form σ + tf or v0 ≤ 0.

    Returns:
        Suitability: SUITABLE when t ≥ |v| + ε, UNKNOWN otherwise.
    """
    if not S.is_elliptic():
        raise WallError(f"Suitability is only decided on elliptic presets, not {S.name}", "surface")
    if len(H) != 2 or H[0] != 1:
        raise WallError(f"{H.coords} is not of the form sigma + t f", "form")
    if v.v0 <= 0:
        raise WallError("Suitability needs a vector of positive rank", "rank")
    if H[1] >= discriminant_bound(S, v) + S.epsilon:
        return Suitability.SUITABLE
    return Suitability.UNKNOWN


def threshold_Md(S: SurfaceClass, H: DivisorClass, d: int) -> Fraction | float:
    """Compute M_d = max of d(C²+2)/(2C·H) over effective classes C with 0 < C·H < d.

    Args:
        S (SurfaceClass): The surface, with effective generators configured.
        H (DivisorClass): An ample class.
        d (int): A positive integer.

    Returns:
        Fraction | float: The maximum, or NO_CURVES (−∞) if no class qualifies.
    """
    l_values = [
        Fraction(d * (divisor_square(S, C) + 2), 2 * intersect(S, C, H))
        for C in effective_classes_below(S, H, d)
    ]
    return max(l_values) if l_values else NO_CURVES
