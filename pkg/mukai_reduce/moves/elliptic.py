"""
This module connects two triples of equal rank through the elliptic preset: both triples are
twisted until their elliptic images are suitable, retargeted to the elliptic surface, joined by a
change of polarization and a fiber twist, and retargeted back.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import logging
import math

# Local imports
from mukai_reduce.lattice import elliptic, intersect
from mukai_reduce.lattice import square as divisor_square
from mukai_reduce.mukai import MukaiVector, Triple, discriminant_bound, square

from .apply import apply
from .certificate import StepCertificate
from .move import (
    ChangePolarization,
    Move,
    MoveError,
    RetargetLattice,
    TensorLineBundle,
    TensorPowerOfH,
)


# ==================================================================================================
# --- Searches
# ==================================================================================================
def minimal_quadratic_solution(A: int, B: int, C: int) -> int:
    """Smallest integer d ≥ 0 with A·d² + B·d + C ≥ 0, for A > 0."""

    def f(d: int) -> int:
        return (A * d + B) * d + C

    if f(0) >= 0:
        return 0
    # 0 lies strictly between the roots: start from the integer part of the larger one
    d = max(0, (math.isqrt(B * B - 4 * A * C) - B) // (2 * A))
    while f(d) < 0:
        d += 1
    while d > 0 and f(d - 1) >= 0:
        d -= 1
    return d


def _elliptic_parameter(t: Triple, g: int) -> int:
    """p with ξ_w = g(σ + p·f) having the square of the primitive part of t.

    (σ + p·f)² = 2(p − ε) on the elliptic preset of the kind of t.
    """
    w = t.w
    return t.surface.epsilon + (t.k + w.v0 * w.v2) // (g * g)


def _minimal_suitable_twist(t: Triple, g: int, p_min: int) -> int:
    """Smallest d ≥ 0 such that the elliptic parameter of t ⊗ O(dH) is at least p_min."""
    S, H, w = t.surface, t.H, t.w
    R, xi, a = w.v0, w.v1, w.v2
    # R·a_d ≥ g²(p_min − ε) − k with a_d = a + d·ξ·H + R·d²·H²/2
    target = g * g * (p_min - S.epsilon) - t.k
    A = R * R * divisor_square(S, H) // 2
    B = R * intersect(S, xi, H)
    return minimal_quadratic_solution(A, B, R * a - target)


def _push(l_steps: list[tuple[Move, StepCertificate]], t: Triple, mv: Move) -> Triple:
    t_out, certificate = apply(t, mv)
    l_steps.append((mv, certificate))
    return t_out


# ==================================================================================================
# --- Connecting macro
# ==================================================================================================
def connect_via_elliptic(t1: Triple, t2: Triple) -> list[tuple[Move, StepCertificate]]:
    """Join two triples of equal positive rank through the elliptic surface of their kind.

    The triples must satisfy the retargeting conditions: same kind, same rank r, same
    g = gcd(r, ξ) and a₁ ≡ a₂ mod g, with equal squares. On the elliptic surface
    v'ᵢ = m(r, g(σ + pᵢf), aᵢ), and equality of squares gives g·p₁ = g·p₂ + r(a₁ − a₂), so that
    v'₁ ⊗ O(l·f) = v'₂ with l = (a₂ − a₁)/g.

    Args:
        t1 (Triple): The start triple.
        t2 (Triple): The end triple.

    Raises:
        MoveError: If the triples cannot be connected, or a step fails its checks.

    Returns:
        list[tuple[Move, StepCertificate]]: The certified micro-path from t1 to t2.
    """
    if t1 == t2:
        return []

    S1, S2 = t1.surface, t2.surface
    if t1.v.v0 <= 0 or t2.v.v0 <= 0:
        raise MoveError("Only triples of positive rank can be connected", "rank")
    if S1.kind is not S2.kind:
        raise MoveError(f"Cannot connect {S1.name} to {S2.name}: different kinds", "same kind")
    if square(S1, t1.v) != square(S2, t2.v) or t1.m != t2.m:
        raise MoveError(
            f"Squares differ: {square(S1, t1.v)} and {square(S2, t2.v)}, or m differs",
            "squares",
        )
    w1, w2 = t1.w, t2.w
    if w1.v0 != w2.v0:
        raise MoveError(f"Ranks differ: {w1.v0} and {w2.v0}", "equal rank")
    R = w1.v0
    g = math.gcd(R, w1.v1.content())
    if g != math.gcd(R, w2.v1.content()):
        raise MoveError("gcd(r, ξ) differs between the triples", "equal g")
    if (w1.v2 - w2.v2) % g:
        raise MoveError(f"a₁ = {w1.v2} and a₂ = {w2.v2} differ mod {g}", "congruence")

    Y = elliptic(S1.kind)
    bound = discriminant_bound(S1, t1.v)
    # σ + p·f is ample for p ≥ 3 on the K3 preset and p ≥ 1 on the Abelian one
    p_min = max(math.ceil(bound) + Y.epsilon, 3 if Y.epsilon else 1)
    d1 = _minimal_suitable_twist(t1, g, p_min)
    e2 = _minimal_suitable_twist(t2, g, p_min)
    logging.info(f"Connect through {Y.name}: twists d1={d1}, d2={e2}, p_min={p_min}")

    l_steps: list[tuple[Move, StepCertificate]] = []
    t = t1
    if d1:
        t = _push(l_steps, t, TensorPowerOfH(d1))

    # Image of the second triple, twisted to a suitable parameter
    t2_twisted = t2
    if e2:
        t2_twisted, _ = apply(t2, TensorPowerOfH(e2))

    m = t1.m
    a1, a2 = t.w.v2, t2_twisted.w.v2
    p1, p2 = _elliptic_parameter(t, g), _elliptic_parameter(t2_twisted, g)
    H1, H2 = Y.divisor(1, p1), Y.divisor(1, p2)

    t = _push(l_steps, t, RetargetLattice(Y, m * MukaiVector(R, g * H1, a1), H1))
    if p2 != p1:
        t = _push(l_steps, t, ChangePolarization(H2))
    if a2 != a1:
        t = _push(l_steps, t, TensorLineBundle(((a2 - a1) // g) * Y.divisor(0, 1)))
    if t.v != m * MukaiVector(R, g * H2, a2):
        raise MoveError(f"Fiber twist ends at {t.describe()}, not at the second image", "squares")

    t = _push(l_steps, t, RetargetLattice(S2, t2_twisted.v, t2_twisted.H))
    if e2:
        t = _push(l_steps, t, TensorPowerOfH(-e2))
    if t != t2:
        raise MoveError(f"Connection ends at {t.describe()} instead of {t2.describe()}", "endpoint")
    return l_steps
