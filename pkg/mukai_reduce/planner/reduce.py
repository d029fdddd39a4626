"""
This module reduces any (m,k)-triple to the canonical triple (rank1(kind, k), m(0, h, 0), h)
through four steps:

1. a rank-0 vector is twisted by a multiple of H and dualized to positive rank;
2. the first Chern class is made a multiple of the polarization, the triple is moved to a rank-1
   surface, twisted and dualized, so that the rank becomes prime to the first Chern class;
3. the triple is connected through the elliptic surface to m(r, h_k, 0) on rank1(kind, k),
   twisted and dualized, so that the rank becomes a multiple of 2k;
4. the triple is moved to m(2kp, h_k, 0), dualized to m(0, h_k, 2kp) and twisted by −p.

Every "large enough" choice is the smallest value passing all the decidable gates.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import itertools
import logging
import math
from fractions import Fraction
from typing import Any, Callable, Iterator

# Local imports
from mukai_reduce.lattice import (
    DivisorClass,
    SurfaceClass,
    are_proportional,
    intersect,
    is_ample,
    is_primitive,
    rank1,
)
from mukai_reduce.lattice import square as divisor_square
from mukai_reduce.mukai import MukaiVector, Triple, canonicalize_sign, make_triple
from mukai_reduce.moves import (
    CanonicalizeSign,
    ChangePolarization,
    FMDualAbelian,
    FMDualK3,
    FMDualRank0,
    Move,
    MoveError,
    RetargetLattice,
    StepCertificate,
    TensorPowerOfH,
    apply,
    connect_via_elliptic,
    fm_dual,
    tensor,
)
from mukai_reduce.moves.algebra import DualVariant, variant_for
from mukai_reduce.utils import load_configuration, nested_get
from mukai_reduce.walls import NO_CURVES, is_generic, same_chamber, threshold_Md

from .errors import PlannerError
from .path import Path, is_canonical
from .twists import find_coprime_twist, find_even_twist


# ==================================================================================================
# --- Polarization searches
# ==================================================================================================
def _perturbations(width: int) -> list[DivisorClass]:
    """Offsets of the box [−width, width]², smallest first."""
    l_offsets = itertools.product(range(-width, width + 1), repeat=2)
    return [
        DivisorClass(e)
        for e in sorted(l_offsets, key=lambda e: (abs(e[0]) + abs(e[1]), e[0], e[1]))
    ]


def _nearby_polarizations(
    H: DivisorClass, max_scale: int, width: int
) -> Iterator[tuple[int, DivisorClass]]:
    for scale in range(1, max_scale + 1):
        for e in _perturbations(width):
            yield scale, scale * H + e


def find_dual_polarization(
    S: SurfaceClass,
    v: MukaiVector,
    H: DivisorClass,
    max_scale: int,
    width: int,
) -> DivisorClass | None:
    """Find a polarization K = λH + e in the v-chamber of H fit for the rank-0 transform of v.

    K must be primitive, ample, generic for the dual vector ṽ = (a, −ξ, 0), in the same
    v-chamber as H, and satisfy a > M_d with d = ξ·K. The polarizations are tried by
    increasing λ, then by increasing size of e.

    Args:
        S (SurfaceClass): A rank-2 surface.
        v (MukaiVector): A rank-0 vector (0, ξ, a) with a > 0.
        H (DivisorClass): A v-generic polarization.
        max_scale (int): Largest λ tried.
        width (int): Half-width of the box of offsets e.

    Returns:
        DivisorClass | None: The polarization, or None if none passes the gates. None is also
        returned as soon as a scale only fails on the threshold.
    """
    v_dual = fm_dual(S, v, DualVariant.RANK0)
    current_scale, blocked_by_gate = 0, False
    for scale, K in _nearby_polarizations(H, max_scale, width):
        if scale != current_scale:
            if blocked_by_gate:
                return None
            current_scale = scale
        if not is_primitive(K) or not is_ample(S, K):
            continue
        if not is_generic(S, v_dual, K)[0] or not same_chamber(S, v, H, K):
            continue
        if v.v2 > threshold_Md(S, K, intersect(S, v.v1, K)):
            return K
        blocked_by_gate = True
    return None


def find_polarization_twist(
    S: SurfaceClass,
    v: MukaiVector,
    H: DivisorClass,
    max_twist: int,
) -> tuple[int, DivisorClass] | None:
    """Find the smallest d ≥ 0 such that ζ' = ζ + (r/g)·d·H is a polarization in the chamber of
    v ⊗ O(dH), where v = m(r, g·ζ, a) and g = gcd(r, ξ).

    Then v ⊗ O(dH) = m(r, g·ζ', a_d) has first Chern class a multiple of the polarization ζ'.

    Args:
        S (SurfaceClass): The surface.
        v (MukaiVector): A vector of positive rank.
        H (DivisorClass): A v-generic polarization.
        max_twist (int): Largest d tried.

    Returns:
        tuple[int, DivisorClass] | None: d and ζ', or None.
    """
    m = v.content()
    r, xi = v.v0 // m, v.v1.divide(m)
    g = math.gcd(r, xi.content())
    zeta, step = xi.divide(g), r // g
    for d in range(max_twist + 1):
        zeta_d = zeta + step * d * H
        if not is_ample(S, zeta_d):
            continue
        if S.ns_rank == 1:
            return d, zeta_d
        if not is_primitive(zeta_d):
            continue
        if zeta_d == H or same_chamber(S, tensor(S, v, d * H), H, zeta_d):
            return d, zeta_d
    return None


# ==================================================================================================
# --- Reducer
# ==================================================================================================
class Reducer:
    """
    Builds the certified path of a triple to its canonical triple.

    Attributes:
        max_twist (int): Bound of every increasing search.
        max_scale (int): Largest scale of a nearby polarization.
        perturbation (int): Half-width of the offsets of a nearby polarization.
    """

    def __init__(self, config: dict[str, Any] | None = None):
        if config is None:
            config = load_configuration()
        self.max_twist = int(nested_get(config, ["planner", "max_twist"]))
        self.max_scale = int(nested_get(config, ["planner", "max_scale"]))
        self.perturbation = int(nested_get(config, ["planner", "perturbation"]))
        self.l_steps: list[StepCertificate] = []
        self.current: Triple | None = None
        self.step = 0

    # ----------------------------------------------------------------------------------------------
    # Helpers
    # ----------------------------------------------------------------------------------------------
    def _push(self, mv: Move) -> Triple:
        try:
            t_out, certificate = apply(self.current, mv)
        except MoveError as e:
            raise PlannerError(str(e), e.check, self.step) from e
        logging.info(f"Step {self.step}: {mv.describe()} -> {t_out.describe()}")
        self.l_steps.append(certificate)
        self.current = t_out
        return t_out

    def _push_fm_dual(self) -> Triple:
        variant = variant_for(self.current.surface)
        self._push(FMDualK3() if variant is DualVariant.K3 else FMDualAbelian())
        if canonicalize_sign(self.current.surface, self.current.v) != self.current.v:
            self._push(CanonicalizeSign())
        return self.current

    def _fail(self, message: str, check: str) -> PlannerError:
        return PlannerError(message, check, self.step)

    # ----------------------------------------------------------------------------------------------
    # Step 1: reduction to positive rank
    # ----------------------------------------------------------------------------------------------
    def _rank0_twist_rank1(self, t: Triple) -> int:
        S, H, v = t.surface, t.H, t.v
        degree = intersect(S, v.v1, H)
        M = threshold_Md(S, H, degree)
        bound = 0 if M == NO_CURVES else max(M, 0)
        return max(1, math.floor((Fraction(bound) - v.v2) / degree) + 1)

    def _rank0_twist_rank2(self, t: Triple) -> tuple[int, DivisorClass]:
        S, H, v = t.surface, t.H, t.v
        degree = intersect(S, v.v1, H)
        for d in range(1, self.max_twist + 1):
            a_d = v.v2 + d * degree
            if a_d <= 0:
                continue
            v_d = tensor(S, v, d * H, H)
            if not is_generic(S, v_d, H)[0]:
                continue
            K = find_dual_polarization(S, v_d, H, self.max_scale, self.perturbation)
            if K is not None:
                return d, K
        raise self._fail(f"No twist up to {self.max_twist} for {t.describe()}", "search bound")

    def step_rank_zero(self) -> None:
        self.step = 1
        t = self.current
        if t.v.v0 != 0:
            return
        if t.surface.ns_rank == 1:
            d, K = self._rank0_twist_rank1(t), t.H
        else:
            d, K = self._rank0_twist_rank2(t)
        self._push(TensorPowerOfH(d))
        if K != t.H:
            self._push(ChangePolarization(K))
        self._push(FMDualRank0())
        if canonicalize_sign(self.current.surface, self.current.v) != self.current.v:
            self._push(CanonicalizeSign())

    # ----------------------------------------------------------------------------------------------
    # Step 2: rank prime with the first Chern class
    # ----------------------------------------------------------------------------------------------
    def _change_away_from(self, zeta: DivisorClass) -> None:
        """Move H inside its chamber to a polarization not proportional to ζ."""
        S, v, H = self.current.surface, self.current.v, self.current.H
        for _, K in _nearby_polarizations(H, self.max_scale, self.perturbation):
            if are_proportional(K, zeta) or not is_primitive(K) or not is_ample(S, K):
                continue
            if same_chamber(S, v, H, K):
                self._push(ChangePolarization(K))
                return
        raise self._fail("No polarization of the chamber avoids the first Chern class", "search")

    def step_coprime(self) -> None:
        self.step = 2
        t = self.current
        S, w = t.surface, t.w
        r, g = w.v0, math.gcd(w.v0, w.v1.content())
        if S.ns_rank == 1 and g == 1:
            return

        result = find_polarization_twist(S, t.v, t.H, self.max_twist)
        if result is None and S.ns_rank == 2 and are_proportional(w.v1, t.H):
            self._change_away_from(w.v1)
            t = self.current
            result = find_polarization_twist(S, t.v, t.H, self.max_twist)
        if result is None:
            raise self._fail("No twist makes ξ a multiple of a polarization", "search bound")
        d, zeta = result
        if d:
            self._push(TensorPowerOfH(d))
        if S.ns_rank == 2 and zeta != self.current.H:
            self._push(ChangePolarization(zeta))

        # ξ = g·ζ with ζ² = 2l
        m, a = t.m, self.current.w.v2
        l = divisor_square(S, zeta) // 2
        S_l = rank1(S.kind, l)
        t_l = make_triple(S_l, m * MukaiVector(r, S_l.divisor(g), a), S_l.divisor(1))
        if t_l != self.current:
            self._push(RetargetLattice(S_l, t_l.v, t_l.H))

        # Smallest s with n_s > 32m⁴r³k, a_s > 0 and gcd(n_s, a_s) = 1
        k = t.k
        N_gate = (32 * m**4 * r**3 * k - g) // r
        N_positive = (math.isqrt(l * k) + 1 - l * g) // (r * l)
        N = max(0, N_gate, N_positive)
        s = find_coprime_twist(r, g, a, l, N, max_tries=self.max_twist)
        logging.info(f"Step 2: coprime twist s={s} beyond N={N}")
        self._push(TensorPowerOfH(s))
        self._push_fm_dual()

    # ----------------------------------------------------------------------------------------------
    # Step 3: rank in 2kZ
    # ----------------------------------------------------------------------------------------------
    @staticmethod
    def _final_target(S_k: SurfaceClass, m: int, rank: int) -> Triple:
        return make_triple(S_k, m * MukaiVector(rank, S_k.divisor(1), 0), S_k.divisor(1))

    @staticmethod
    def _final_gate_holds(S_k: SurfaceClass, m: int, rank: int) -> bool:
        """Whether m·rank > M_d for the dual m(0, h_k, rank), with d = m·h_k²."""
        d = m * divisor_square(S_k, S_k.divisor(1))
        return m * rank > threshold_Md(S_k, S_k.divisor(1), d)

    def step_even_rank(self) -> None:
        self.step = 3
        t = self.current
        m, k, w = t.m, t.k, t.w
        R = w.v0
        S_k = rank1(t.surface.kind, k)
        if (
            t.surface == S_k
            and R % (2 * k) == 0
            and math.gcd(R, w.v1.content()) == 1
            and self._final_gate_holds(S_k, m, R)
        ):
            return

        target = self._final_target(S_k, m, R)
        try:
            l_micro = connect_via_elliptic(t, target)
        except MoveError as e:
            raise PlannerError(str(e), e.check, self.step) from e
        for mv, certificate in l_micro:
            logging.info(f"Step 3: {mv.describe()} -> {certificate.output.describe()}")
            self.l_steps.append(certificate)
        self.current = target

        N = (32 * m**4 * R**3 * k - 1) // R
        s = find_even_twist(R, k, N)
        logging.info(f"Step 3: even twist s={s}")
        self._push(TensorPowerOfH(s))
        self._push(FMDualK3() if variant_for(S_k) is DualVariant.K3 else FMDualAbelian())

    # ----------------------------------------------------------------------------------------------
    # Step 4: conclusion
    # ----------------------------------------------------------------------------------------------
    def step_conclusion(self) -> None:
        self.step = 4
        t = self.current
        m, k, R = t.m, t.k, t.w.v0
        if R % (2 * k):
            raise self._fail(f"Rank {R} is not a multiple of 2k = {2 * k}", "rank")
        p = R // (2 * k)
        S_k = rank1(t.surface.kind, k)
        target = self._final_target(S_k, m, R)
        if target != t:
            self._push(RetargetLattice(S_k, target.v, target.H))
        self._push_fm_dual()
        self._push(TensorPowerOfH(-p))
        if not is_canonical(self.current):
            raise self._fail(f"Reduction ends at {self.current.describe()}", "endpoint")

    # ----------------------------------------------------------------------------------------------
    # Entry point
    # ----------------------------------------------------------------------------------------------
    def run(self, t: Triple) -> Path:
        if t.raw:
            raise PlannerError(f"{t.describe()} is not sign-canonical", "triple")
        self.l_steps, self.current, self.step = [], t, 0
        if not is_canonical(t):
            l_stages: list[Callable[[], None]] = [
                self.step_rank_zero,
                self.step_coprime,
                self.step_even_rank,
                self.step_conclusion,
            ]
            for stage in l_stages:
                stage()
        logging.info(f"Reduced {t.describe()} in {len(self.l_steps)} moves")
        return Path(start=t, steps=tuple(self.l_steps), end=self.current)


def reduce_to_canonical(t: Triple, config: dict[str, Any] | None = None) -> Path:
    """Build the certified path of t to (rank1(kind, k), m(0, h, 0), h).

    Args:
        t (Triple): A valid (m,k)-triple.
        config (dict[str, Any] | None, optional): Run configuration with the planner knobs.
            Defaults to the template configuration.

    Raises:
        PlannerError: If a step cannot be completed. Its attributes name the step and the check.

    Returns:
        Path: The path, ending at the canonical triple.
    """
    return Reducer(config).run(t)
