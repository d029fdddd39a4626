"""
This module applies a move to an (m,k)-triple and certifies it. Every decidable precondition is
checked and recorded with its witness; the hypotheses that cannot be decided numerically are
recorded as assumptions.

Functions:
    apply(t: Triple, mv: Move) -> tuple[Triple, StepCertificate]:
        Apply a move, returning the new triple and the certificate of the step.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import logging
import math
from fractions import Fraction
from typing import Any, Callable

# Local imports
from mukai_reduce.lattice import (
    DivisorClass,
    LatticeError,
    SurfaceClass,
    dual_surface,
    intersect,
    is_ample,
    is_primitive,
)
from mukai_reduce.mukai import (
    MukaiVector,
    Triple,
    TripleError,
    canonicalize_sign,
    make_triple,
    primitive_decomposition,
    square,
)
from mukai_reduce.walls import (
    NO_CURVES,
    Suitability,
    WallError,
    is_generic,
    is_suitable,
    same_chamber,
    threshold_Md,
)

from .algebra import DualVariant, fm_dual, tensor
from .certificate import Check, StepCertificate
from .move import (
    CanonicalizeSign,
    ChangePolarization,
    FMDualAbelian,
    FMDualK3,
    FMDualRank0,
    Move,
    MoveError,
    RetargetLattice,
    TensorLineBundle,
    TensorPowerOfH,
)

ASSUMPTION_BOUNDEDNESS = (
    "boundedness constant T: every H-semistable sheaf with this vector satisfies WIT with "
    "respect to the transform once the numeric gate holds"
)
ASSUMPTION_RANK0_THRESHOLD = (
    "threshold a0: beyond M_d, every sheaf with this rank-0 vector is globally generated with "
    "vanishing higher cohomology"
)
ASSUMPTION_CONNECTEDNESS = (
    "connectedness of the moduli spaces of polarized K3 or Abelian surfaces gives a family over "
    "a smooth connected curve joining the two triples"
)
ASSUMPTION_PICARD_JUMP = (
    "the Picard rank jumps to at least 2 on a dense set of a one-parameter deformation"
)


# ==================================================================================================
# --- Check collection
# ==================================================================================================
class _Checklist:
    """Collects the checks of a move, raising on the first failure."""

    def __init__(self, mv: Move):
        self.mv = mv
        self.l_checks: list[Check] = []

    def require(self, ok: bool, name: str, witness: Any, message: str) -> None:
        check = Check(name, witness, bool(ok))
        self.l_checks.append(check)
        if not ok:
            raise MoveError(f"{self.mv.describe()}: {message}", name)

    def record(self, name: str, witness: Any) -> None:
        self.l_checks.append(Check(name, witness, True))


def _validated(
    checklist: _Checklist,
    S: SurfaceClass,
    v: MukaiVector,
    H: DivisorClass,
    allow_raw: bool = False,
    name: str = "output triple",
) -> Triple:
    try:
        t = make_triple(S, v, H, allow_raw=allow_raw)
    except (TripleError, WallError) as e:
        checklist.l_checks.append(Check(name, {"condition": e.condition}, False))
        raise MoveError(f"{checklist.mv.describe()}: {e}", name) from e
    checklist.record(name, {"v": v.to_dic(), "H": H.to_list()})
    return t


def _threshold_value(M: Fraction | float) -> str:
    return "-inf" if M == NO_CURVES else str(M)


# ==================================================================================================
# --- Moves
# ==================================================================================================
def _apply_tensor_power(t: Triple, mv: TensorPowerOfH, checklist: _Checklist):
    S, H = t.surface, t.H
    v_out = tensor(S, t.v, mv.d * H, H)
    generic, wall = is_generic(S, v_out, H)
    checklist.require(
        generic,
        "genericity",
        {"H": H.to_list(), "wall": wall},
        f"H = {S.label(H)} is not generic for {v_out.describe(S)}",
    )
    return S, v_out, H, (), False


def _apply_tensor_line_bundle(t: Triple, mv: TensorLineBundle, checklist: _Checklist):
    S, H = t.surface, t.H
    checklist.require(
        t.v.v0 > 0,
        "rank-positive",
        {"v0": t.v.v0},
        "arbitrary line bundles only act on vectors of positive rank",
    )
    checklist.require(
        len(mv.c1L) == S.ns_rank,
        "dimension",
        {"c1L": mv.c1L.to_list()},
        f"c1L does not live on {S.name}",
    )
    v_out = tensor(S, t.v, mv.c1L)
    generic, wall = is_generic(S, v_out, H)
    checklist.require(
        generic,
        "genericity",
        {"H": H.to_list(), "wall": wall},
        f"H = {S.label(H)} is not generic for {v_out.describe(S)}",
    )
    return S, v_out, H, (), False


def _check_rank0_gate(
    checklist: _Checklist, S: SurfaceClass, xi: DivisorClass, a: int, H: DivisorClass
) -> None:
    """Gate a > M_d with d = ξ·H for the rank-0 side of a transform."""
    d = intersect(S, xi, H)
    M = threshold_Md(S, H, d)
    checklist.require(
        a > M,
        "threshold",
        {"gate": "a > M_d", "a": a, "d": d, "M_d": _threshold_value(M)},
        f"a = {a} does not exceed M_d = {_threshold_value(M)} for d = {d}",
    )


def _apply_fm_dual_rank_positive(t: Triple, mv: Move, checklist: _Checklist):
    S, v, H = t.surface, t.v, t.H
    variant = DualVariant(mv.type)
    checklist.require(
        v.v0 > 0, "rank", {"v0": v.v0}, f"{mv.type} needs a vector of positive rank"
    )
    v_out = fm_dual(S, v, variant)
    checklist.require(
        S.ns_rank == 1,
        "rank-1 surface",
        {"surface": S.name},
        f"{mv.type} is only certified on surfaces of Picard rank 1",
    )
    checklist.require(
        v.v2 >= 0,
        "output rank",
        {"v2": v.v2},
        f"the transform of {v.describe(S)} has negative rank",
    )

    if v.v2 > 0:
        r, n, k = v.v0, v.v1[0], square(S, v) // 2
        checklist.require(
            n > 32 * r**3 * k,
            "threshold",
            {"gate": "n > 32r^3k", "n": n, "r": r, "k": k, "bound": 32 * r**3 * k},
            f"n = {n} does not exceed 32r³k = {32 * r**3 * k}",
        )
        l_assumptions = (ASSUMPTION_BOUNDEDNESS,)
    else:
        # The output has rank 0: the inverse of the rank-0 transform, gated on its canonical side
        xi = canonicalize_sign(S, v_out).v1
        _check_rank0_gate(checklist, S, xi, v.v0, H)
        l_assumptions = (ASSUMPTION_RANK0_THRESHOLD,)

    return dual_surface(S), v_out, H, l_assumptions, True


def _apply_fm_dual_rank_zero(t: Triple, mv: FMDualRank0, checklist: _Checklist):
    S, v, H = t.surface, t.v, t.H
    checklist.require(v.v0 == 0, "rank", {"v0": v.v0}, "FMDualRank0 needs a rank-0 vector")
    checklist.require(
        v.v2 > 0, "output rank", {"v2": v.v2}, f"the transform of {v.describe(S)} has rank ≤ 0"
    )
    _check_rank0_gate(checklist, S, v.v1, v.v2, H)
    v_out = fm_dual(S, v, DualVariant.RANK0)
    generic, wall = is_generic(S, v_out, H)
    checklist.require(
        generic,
        "dual genericity",
        {"H": H.to_list(), "wall": wall},
        f"H = {S.label(H)} is not generic for the dual vector {v_out.describe(S)}",
    )
    return S, v_out, H, (ASSUMPTION_RANK0_THRESHOLD,), False


def _apply_change_polarization(t: Triple, mv: ChangePolarization, checklist: _Checklist):
    S, v, H, H_new = t.surface, t.v, t.H, mv.Hnew
    checklist.require(
        len(H_new) == S.ns_rank, "dimension", {"Hnew": H_new.to_list()}, "wrong length"
    )
    checklist.require(
        is_primitive(H_new), "primitive", {"Hnew": H_new.to_list()}, "Hnew is not primitive"
    )
    checklist.require(
        is_ample(S, H_new), "ample", {"Hnew": H_new.to_list()}, "Hnew is not ample"
    )
    generic, wall = is_generic(S, v, H_new)
    checklist.require(
        generic,
        "genericity",
        {"Hnew": H_new.to_list(), "wall": wall},
        f"Hnew = {S.label(H_new)} is not generic",
    )

    # Two suitable polarizations lie in the same chamber, the one adjacent to f
    if S.is_elliptic() and v.v0 > 0 and H[0] == 1 and H_new[0] == 1:
        if (
            is_suitable(S, v, H) is Suitability.SUITABLE
            and is_suitable(S, v, H_new) is Suitability.SUITABLE
        ):
            checklist.record("same chamber", {"witness": "both suitable", "t": [H[1], H_new[1]]})
            return S, v, H_new, (), False

    checklist.require(
        same_chamber(S, v, H, H_new),
        "same chamber",
        {"witness": "no wall between", "H": H.to_list(), "Hnew": H_new.to_list()},
        f"a wall separates {S.label(H)} and {S.label(H_new)}",
    )
    return S, v, H_new, (), False


def _g_invariants(v: MukaiVector) -> tuple[int, int, int]:
    """Return (r, g, a) of the primitive part w = (r, ξ, a), with g = gcd(r, ξ)."""
    _, w = primitive_decomposition(v)
    return w.v0, math.gcd(w.v0, w.v1.content()), w.v2


def _apply_retarget(t: Triple, mv: RetargetLattice, checklist: _Checklist):
    S, v = t.surface, t.v
    S_new, v_new, H_new = mv.target_surface, mv.v_new, mv.H_new
    checklist.require(
        S.kind is S_new.kind,
        "same kind",
        {"from": S.kind.value, "to": S_new.kind.value},
        "retargeting changes the kind of surface",
    )
    checklist.require(
        v.v0 > 0 and v.v0 == v_new.v0,
        "equal rank",
        {"from": v.v0, "to": v_new.v0},
        "retargeting needs equal positive ranks",
    )
    t_new = _validated(checklist, S_new, v_new, H_new, name="target triple")
    checklist.require(
        (t.m, t.k) == (t_new.m, t_new.k),
        "equal (m,k)",
        {"from": [t.m, t.k], "to": [t_new.m, t_new.k]},
        "retargeting changes (m,k)",
    )
    r, g, a = _g_invariants(v)
    _, g_new, a_new = _g_invariants(v_new)
    checklist.require(
        g == g_new, "equal g", {"from": g, "to": g_new}, f"gcd(r, ξ) changes from {g} to {g_new}"
    )
    checklist.require(
        (a - a_new) % g == 0,
        "congruence",
        {"a": a, "a_new": a_new, "g": g},
        f"a = {a} and a' = {a_new} are not congruent mod {g}",
    )
    l_assumptions = [ASSUMPTION_CONNECTEDNESS]
    if S.ns_rank == 1 or S_new.ns_rank == 1:
        l_assumptions.append(ASSUMPTION_PICARD_JUMP)
    return S_new, v_new, H_new, tuple(l_assumptions), False


def _apply_canonicalize_sign(t: Triple, mv: CanonicalizeSign, checklist: _Checklist):
    S, v = t.surface, t.v
    v_out = canonicalize_sign(S, v)
    checklist.record("sign", {"flipped": v_out != v})
    return S, v_out, t.H, (), False


_DIC_APPLY: dict[type, Callable] = {
    TensorPowerOfH: _apply_tensor_power,
    TensorLineBundle: _apply_tensor_line_bundle,
    FMDualK3: _apply_fm_dual_rank_positive,
    FMDualAbelian: _apply_fm_dual_rank_positive,
    FMDualRank0: _apply_fm_dual_rank_zero,
    ChangePolarization: _apply_change_polarization,
    RetargetLattice: _apply_retarget,
    CanonicalizeSign: _apply_canonicalize_sign,
}


# ==================================================================================================
# --- Entry point
# ==================================================================================================
def apply(t: Triple, mv: Move) -> tuple[Triple, StepCertificate]:
    """Apply a move to a triple and certify the step.

    Args:
        t (Triple): The input triple. Only CanonicalizeSign accepts a raw input.
        mv (Move): The move.

    Raises:
        MoveError: If a check fails. Its attribute check names the failed check.

    Returns:
        tuple[Triple, StepCertificate]: The output triple and the certificate.
    """
    checklist = _Checklist(mv)
    if not isinstance(mv, CanonicalizeSign):
        checklist.require(
            not t.raw,
            "sign-canonical input",
            {"v": t.v.to_dic()},
            f"{t.v.describe(t.surface)} must be sign-canonicalized first",
        )

    if type(mv) not in _DIC_APPLY:
        raise MoveError(f"Unknown move {mv!r}", "format")
    try:
        S_out, v_out, H_out, l_assumptions, allow_raw = _DIC_APPLY[type(mv)](t, mv, checklist)
    except (WallError, LatticeError) as e:
        raise MoveError(f"{mv.describe()}: {e}", e.condition) from e

    if isinstance(mv, RetargetLattice):
        t_out = make_triple(S_out, v_out, H_out)
    else:
        t_out = _validated(checklist, S_out, v_out, H_out, allow_raw=allow_raw)

    checklist.require(
        (t_out.m, t_out.k) == (t.m, t.k)
        and square(S_out, t_out.v) == square(t.surface, t.v),
        "invariants",
        {"m": [t.m, t_out.m], "k": [t.k, t_out.k]},
        "the move does not preserve (m,k)",
    )

    certificate = StepCertificate(
        move=mv,
        input=t,
        output=t_out,
        checks=tuple(checklist.l_checks),
        assumptions=tuple(l_assumptions),
    )
    logging.debug(f"{mv.describe()}: {t.describe()} -> {t_out.describe()}")
    return t_out, certificate
