"""
This module provides an exact integer model of the Néron-Severi lattice of a K3 or Abelian
surface of Picard rank 1 or 2, together with its ample and effective cone oracles.

Classes:
    Kind: The kind of surface (K3 or Abelian).
    DivisorClass: A divisor class, given by its integer coordinates in the NS basis.
    SurfaceClass: A surface abstracted to its Néron-Severi lattice and cone data.

Functions:
    rank1(kind: Kind | str, l: int) -> SurfaceClass:
        Build the rank-1 surface whose generator h satisfies h² = 2l.

    elliptic(kind: Kind | str) -> SurfaceClass:
        Build the elliptic surface with NS = Zσ ⊕ Zf.

    preset(name: str) -> SurfaceClass:
        Build a surface from its preset name.

    intersect(S: SurfaceClass, D: DivisorClass, E: DivisorClass) -> int:
        Intersection pairing D·E.

    is_primitive(D: DivisorClass) -> bool:
        Whether the gcd of the coordinates of D is 1.

    is_ample(S: SurfaceClass, D: DivisorClass) -> bool:
        Membership in the ample cone.

    orthogonal_generator(S: SurfaceClass, H: DivisorClass) -> DivisorClass:
        Primitive generator of H^⊥ in a rank-2 lattice.

    effective_coefficients(S: SurfaceClass, D: DivisorClass) -> tuple[int, ...] | None:
        Coefficients of D on the effective generators, if D is in the effective cone.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable

# Import third-party modules
import numpy as np


# ==================================================================================================
# --- Exceptions
# ==================================================================================================
class LatticeError(ValueError):
    """Raised when a lattice operation receives inconsistent or unsupported data."""

    def __init__(self, message: str, condition: str = "lattice"):
        super().__init__(message)
        self.condition = condition


# ==================================================================================================
# --- Domain types
# ==================================================================================================
class Kind(str, Enum):
    K3 = "K3"
    ABELIAN = "Abelian"

    @classmethod
    def parse(cls, value: "Kind | str") -> "Kind":
        """Parse a kind from its name, accepting the short forms "k3" and "ab"."""
        if isinstance(value, Kind):
            return value
        dic_aliases = {"k3": cls.K3, "ab": cls.ABELIAN, "abelian": cls.ABELIAN}
        try:
            return dic_aliases[str(value).strip().lower()]
        except KeyError as e:
            raise LatticeError(f"Unknown surface kind: {value}", "kind") from e

    @property
    def short(self) -> str:
        return "k3" if self is Kind.K3 else "ab"

    @property
    def epsilon(self) -> int:
        return 1 if self is Kind.K3 else 0


@dataclass(frozen=True)
class DivisorClass:
    """A divisor class given by its integer coordinates in the NS basis of the owning surface.

    Attributes:
        coords (tuple[int, ...]): The coordinates.
    """

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        object.__setattr__(self, "coords", tuple(int(x) for x in coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_length(self, other)
        return DivisorClass(x + y for x, y in zip(self.coords, other.coords))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_length(self, other)
        return DivisorClass(x - y for x, y in zip(self.coords, other.coords))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-x for x in self.coords)

    def __mul__(self, factor: int) -> "DivisorClass":
        return DivisorClass(factor * x for x in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def content(self) -> int:
        """Return the gcd of the coordinates (0 for the zero class)."""
        return math.gcd(*self.coords)

    def divide(self, divisor: int) -> "DivisorClass":
        """Exact division of every coordinate by divisor."""
        if divisor == 0 or any(x % divisor for x in self.coords):
            raise LatticeError(f"{self.coords} is not divisible by {divisor}", "divisibility")
        return DivisorClass(x // divisor for x in self.coords)

    def to_list(self) -> list[int]:
        return list(self.coords)


def _check_same_length(D: DivisorClass, E: DivisorClass) -> None:
    if len(D) != len(E):
        raise LatticeError(
            f"Divisor classes of different lengths: {D.coords} and {E.coords}", "dimension"
        )


@dataclass(frozen=True)
class SurfaceClass:
    """A K3 or Abelian surface abstracted to its Néron-Severi lattice.

    Attributes:
        name (str): The preset name, or a user-given name for loaded surfaces.
        kind (Kind): K3 or Abelian.
        gram (tuple[tuple[int, ...], ...]): The Gram matrix of the intersection form.
        basis_labels (tuple[str, ...]): Short labels of the basis classes.
        ample_ref (DivisorClass): A known ample class fixing the positive cone component.
        effective_gens (tuple[DivisorClass, ...]): Extremal generators of the effective cone.

    Methods:
        epsilon: 1 for K3 surfaces, 0 for Abelian surfaces.
        ns_rank: The Picard rank.
        gram_array: The Gram matrix as an exact numpy object array.
        divisor(*coords): Build a divisor class of this surface.
        label(D): Human readable form of a divisor class.
    """

    name: str
    kind: Kind
    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...]
    ample_ref: DivisorClass
    effective_gens: tuple[DivisorClass, ...] = field(default_factory=tuple)

    def __post_init__(self):
        n = len(self.gram)
        if n not in (1, 2):
            raise LatticeError(
                f"Unsupported Picard rank {n}: only ranks 1 and 2 are modeled", "rank"
            )
        if any(len(row) != n for row in self.gram):
            raise LatticeError(f"Gram matrix of {self.name} is not square", "gram")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(n) for j in range(n)):
            raise LatticeError(f"Gram matrix of {self.name} is not symmetric", "gram")
        if any(self.gram[i][i] % 2 for i in range(n)):
            raise LatticeError(f"Gram matrix of {self.name} is not even", "gram")
        if self.determinant == 0:
            raise LatticeError(f"Gram matrix of {self.name} is degenerate", "gram")
        # Signature (1, n-1)
        if (n == 1 and self.gram[0][0] <= 0) or (n == 2 and self.determinant >= 0):
            raise LatticeError(f"Gram matrix of {self.name} has no signature (1, {n - 1})", "gram")
        if len(self.basis_labels) != n:
            raise LatticeError(f"Expected {n} basis labels for {self.name}", "basis_labels")
        if len(self.ample_ref) != n or intersect(self, self.ample_ref, self.ample_ref) <= 0:
            raise LatticeError(f"ample_ref of {self.name} must have positive square", "ample_ref")
        for E in self.effective_gens:
            if len(E) != n:
                raise LatticeError(f"Effective generator {E.coords} has wrong length", "dimension")
            if not E.is_zero() and intersect(self, E, self.ample_ref) <= 0:
                raise LatticeError(
                    f"Effective generator {E.coords} is not positive against ample_ref",
                    "effective_gens",
                )

    @property
    def epsilon(self) -> int:
        return self.kind.epsilon

    @property
    def ns_rank(self) -> int:
        return len(self.gram)

    @property
    def determinant(self) -> int:
        if len(self.gram) == 1:
            return self.gram[0][0]
        return self.gram[0][0] * self.gram[1][1] - self.gram[0][1] * self.gram[1][0]

    @cached_property
    def gram_array(self) -> np.ndarray:
        # Object dtype keeps Python integers, so no overflow on large classes
        return np.array(self.gram, dtype=object)

    def divisor(self, *coords: int) -> DivisorClass:
        if len(coords) != self.ns_rank:
            raise LatticeError(
                f"{self.name} has rank {self.ns_rank}, got coordinates {coords}", "dimension"
            )
        return DivisorClass(coords)

    def zero(self) -> DivisorClass:
        return DivisorClass([0] * self.ns_rank)

    def label(self, D: DivisorClass) -> str:
        l_terms = []
        for coeff, name in zip(D.coords, self.basis_labels):
            if coeff == 0:
                continue
            if coeff == 1:
                l_terms.append(name)
            elif coeff == -1:
                l_terms.append(f"-{name}")
            else:
                l_terms.append(f"{coeff}{name}")
        return "+".join(l_terms).replace("+-", "-") if l_terms else "0"

    def is_elliptic(self) -> bool:
        return self.name in (ELLIPTIC_K3, ELLIPTIC_ABELIAN)


# ==================================================================================================
# --- Presets
# ==================================================================================================
ELLIPTIC_K3 = "elliptic-k3"
ELLIPTIC_ABELIAN = "elliptic-ab"

_PRESET_RANK1 = re.compile(r"^rank1-(k3|ab)-l(\d+)$")


def rank1(kind: Kind | str, l: int) -> SurfaceClass:
    """Build the rank-1 surface of the given kind with generator h of square 2l.

    Args:
        kind (Kind | str): The kind of surface.
        l (int): Half the square of the generator, at least 1.

    Returns:
        SurfaceClass: The surface, named "rank1-<k3|ab>-l<l>".
    """
    kind = Kind.parse(kind)
    if l < 1:
        raise LatticeError(f"rank1 presets need l >= 1, got {l}", "preset")
    return SurfaceClass(
        name=f"rank1-{kind.short}-l{l}",
        kind=kind,
        gram=((2 * l,),),
        basis_labels=("h",),
        ample_ref=DivisorClass([1]),
        effective_gens=(DivisorClass([1]),),
    )


def elliptic(kind: Kind | str) -> SurfaceClass:
    """Build the elliptic surface with a section σ and a fiber f.

    Args:
        kind (Kind | str): The kind of surface. σ² = −2 for K3 surfaces and 0 for Abelian ones.

    Returns:
        SurfaceClass: The surface, named "elliptic-k3" or "elliptic-ab".
    """
    kind = Kind.parse(kind)
    if kind is Kind.K3:
        return SurfaceClass(
            name=ELLIPTIC_K3,
            kind=kind,
            gram=((-2, 1), (1, 0)),
            basis_labels=("sigma", "f"),
            ample_ref=DivisorClass([1, 3]),
            effective_gens=(DivisorClass([1, 0]), DivisorClass([0, 1])),
        )
    return SurfaceClass(
        name=ELLIPTIC_ABELIAN,
        kind=kind,
        gram=((0, 1), (1, 0)),
        basis_labels=("sigma", "f"),
        ample_ref=DivisorClass([1, 1]),
        effective_gens=(DivisorClass([1, 0]), DivisorClass([0, 1])),
    )


def preset(name: str) -> SurfaceClass:
    """Build a surface from its preset name.

    Args:
        name (str): One of "rank1-k3-l<N>", "rank1-ab-l<N>", "elliptic-k3", "elliptic-ab".

    Raises:
        LatticeError: If the name is not a preset name.

    Returns:
        SurfaceClass: The preset surface.
    """
    if name == ELLIPTIC_K3:
        return elliptic(Kind.K3)
    if name == ELLIPTIC_ABELIAN:
        return elliptic(Kind.ABELIAN)
    match = _PRESET_RANK1.match(name)
    if match is None:
        raise LatticeError(f"Unknown surface preset: {name}", "preset")
    return rank1(match.group(1), int(match.group(2)))


def is_preset(S: SurfaceClass) -> bool:
    """Whether S is exactly the preset carrying its name."""
    try:
        return preset(S.name) == S
    except LatticeError:
        return False


def dual_surface(S: SurfaceClass) -> SurfaceClass:
    """Return the lattice of the dual surface.

    The NS lattice of the dual of an Abelian surface is identified with NS(S) through ξ ↦ ξ̂,
    which preserves squares. K3 surfaces are their own Fourier-Mukai partners here.
    """
    return S


# ==================================================================================================
# --- Lattice operations
# ==================================================================================================
def _check_length(S: SurfaceClass, *l_divisors: DivisorClass) -> None:
    for D in l_divisors:
        if len(D) != S.ns_rank:
            raise LatticeError(
                f"Divisor {D.coords} does not live on {S.name} (rank {S.ns_rank})", "dimension"
            )


def intersect(S: SurfaceClass, D: DivisorClass, E: DivisorClass) -> int:
    """Compute the intersection number D·E through the Gram matrix.

    Args:
        S (SurfaceClass): The surface.
        D (DivisorClass): First class.
        E (DivisorClass): Second class.

    Raises:
        LatticeError: If a coordinate vector does not match the rank of S.

    Returns:
        int: Dᵀ·gram·E.
    """
    _check_length(S, D, E)
    return int(np.array(D.coords, dtype=object) @ S.gram_array @ np.array(E.coords, dtype=object))


def square(S: SurfaceClass, D: DivisorClass) -> int:
    return intersect(S, D, D)


def is_primitive(D: DivisorClass) -> bool:
    """Whether the gcd of the coordinates is 1. The zero class is not primitive."""
    return D.content() == 1


def primitive_part(D: DivisorClass) -> DivisorClass:
    content = D.content()
    if content == 0:
        raise LatticeError("The zero class has no primitive part", "zero")
    return D.divide(content)


def are_proportional(D: DivisorClass, E: DivisorClass) -> bool:
    _check_same_length(D, E)
    if len(D) == 1:
        return True
    return D[0] * E[1] - D[1] * E[0] == 0


def is_ample(S: SurfaceClass, D: DivisorClass) -> bool:
    """Test membership in the ample cone cut out by ample_ref and the effective generators.

    Args:
        S (SurfaceClass): The surface.
        D (DivisorClass): The class to test.

    Returns:
        bool: True iff D² > 0, D·ample_ref > 0 and D·E > 0 for every nonzero effective generator.
    """
    _check_length(S, D)
    if square(S, D) <= 0 or intersect(S, D, S.ample_ref) <= 0:
        return False
    return all(intersect(S, D, E) > 0 for E in S.effective_gens if not E.is_zero())


def orthogonal_generator(S: SurfaceClass, H: DivisorClass) -> DivisorClass:
    """Return the primitive generator D₀ of H^⊥ in a rank-2 lattice.

    The sign is normalized so that the first nonzero coordinate is positive.

    Args:
        S (SurfaceClass): A rank-2 surface.
        H (DivisorClass): A nonzero class.

    Raises:
        LatticeError: On rank-1 surfaces (trivial complement) or for H = 0.

    Returns:
        DivisorClass: D₀ with D₀·H = 0.
    """
    if S.ns_rank != 2:
        raise LatticeError(f"{S.name} has rank 1: the orthogonal complement is trivial", "rank")
    _check_length(S, H)
    if H.is_zero():
        raise LatticeError("The orthogonal complement of 0 is the whole lattice", "zero")
    u = S.gram_array @ np.array(H.coords, dtype=object)
    D0 = primitive_part(DivisorClass([-u[1], u[0]]))
    return normalize_sign(D0)


def normalize_sign(D: DivisorClass) -> DivisorClass:
    """Flip D so that its first nonzero coordinate is positive."""
    for x in D.coords:
        if x != 0:
            return D if x > 0 else -D
    return D


# ==================================================================================================
# --- Effective cone
# ==================================================================================================
def effective_coefficients(S: SurfaceClass, D: DivisorClass) -> tuple[int, ...] | None:
    """Write D as a nonnegative integer combination of the effective generators.

    Args:
        S (SurfaceClass): The surface, with as many effective generators as its rank.
        D (DivisorClass): The class to decompose.

    Raises:
        LatticeError: If the effective generators do not form a basis of NS(S) ⊗ Q.

    Returns:
        tuple[int, ...] | None: The coefficients, or None if D is not effective-or-zero.
    """
    _check_length(S, D)
    l_gens = [E for E in S.effective_gens if not E.is_zero()]
    if len(l_gens) != S.ns_rank:
        raise LatticeError(f"{S.name} needs {S.ns_rank} effective generators", "effective_gens")

    if S.ns_rank == 1:
        (g,) = l_gens[0].coords
        if D[0] % g:
            return None
        c = D[0] // g
        return (c,) if c >= 0 else None

    # Cramer's rule on the 2x2 system D = c0 E0 + c1 E1
    E0, E1 = l_gens
    det = E0[0] * E1[1] - E1[0] * E0[1]
    if det == 0:
        raise LatticeError(f"Effective generators of {S.name} are proportional", "effective_gens")
    num0 = D[0] * E1[1] - E1[0] * D[1]
    num1 = E0[0] * D[1] - D[0] * E0[1]
    if num0 % det or num1 % det:
        return None
    c0, c1 = num0 // det, num1 // det
    return (c0, c1) if c0 >= 0 and c1 >= 0 else None


def is_effective_or_zero(S: SurfaceClass, D: DivisorClass) -> bool:
    return effective_coefficients(S, D) is not None


def is_effective(S: SurfaceClass, D: DivisorClass) -> bool:
    """Whether D is a nonzero effective class."""
    return not D.is_zero() and is_effective_or_zero(S, D)


def effective_classes_below(S: SurfaceClass, H: DivisorClass, bound: int) -> list[DivisorClass]:
    """List the nonzero effective classes C with C·H < bound, in lexicographic order of their
    coefficients on the effective generators.

    Args:
        S (SurfaceClass): The surface.
        H (DivisorClass): An ample class.
        bound (int): Strict upper bound on C·H.

    Returns:
        list[DivisorClass]: The classes.
    """
    if not is_ample(S, H):
        raise LatticeError(f"{S.label(H)} is not ample on {S.name}", "ample")
    l_gens = [E for E in S.effective_gens if not E.is_zero()]
    l_degrees = [intersect(S, E, H) for E in l_gens]
    l_classes = []

    def _recurse(index: int, partial: DivisorClass, degree: int) -> None:
        if index == len(l_gens):
            if not partial.is_zero():
                l_classes.append(partial)
            return
        c = 0
        while degree + c * l_degrees[index] < bound:
            _recurse(index + 1, partial + c * l_gens[index], degree + c * l_degrees[index])
            c += 1

    _recurse(0, S.zero(), 0)
    return l_classes
