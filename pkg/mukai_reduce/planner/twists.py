"""
This module contains the twist searches on rank-1 surfaces. For v = (r, n·h, a) with h² = 2l and
an integer s, the twist v·ch(O(s·h)) is (r, n_s·h, a_s) with n_s = n + r·s and
a_s = a + 2l·n·s + r·l·s². Any prime dividing both n_s and a_s divides k = l·n² − r·a.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import logging
import math

# Local imports
from .errors import PlannerError

DEFAULT_MAX_TRIES = 100_000


# ==================================================================================================
# --- Functions
# ==================================================================================================
def twisted_coefficients(r: int, n: int, a: int, l: int, s: int) -> tuple[int, int]:
    """Return (n_s, a_s) for the twist of (r, n·h, a) by s·h on a surface with h² = 2l."""
    return n + r * s, a + 2 * l * n * s + r * l * s * s


def find_coprime_twist(
    r: int, n: int, a: int, l: int, N: int, max_tries: int = DEFAULT_MAX_TRIES
) -> int:
    """Find the smallest s > N with gcd(n_s, a_s) = 1.

    Args:
        r (int): The rank, positive.
        n (int): The coefficient of h.
        a (int): The last component.
        l (int): Half the square of h.
        N (int): The strict lower bound of s.
        max_tries (int, optional): Number of candidates tried before giving up.
            Defaults to DEFAULT_MAX_TRIES.

    Raises:
        PlannerError: If gcd(r, n, a) ≠ 1, r ≤ 0, l ≤ 0 or l·n² − r·a ≤ 0.

    Returns:
        int: The twist s.
    """
    if r <= 0 or l <= 0:
        raise PlannerError(f"Twist search needs r > 0 and l > 0, got r={r}, l={l}", "range")
    if math.gcd(r, n, a) != 1:
        raise PlannerError(f"(r, n, a) = ({r}, {n}, {a}) is not primitive", "primitive")
    k = l * n * n - r * a
    if k <= 0:
        raise PlannerError(f"l·n² − r·a = {k} is not positive", "square")

    for s in range(N + 1, N + 1 + max_tries):
        n_s, a_s = twisted_coefficients(r, n, a, l, s)
        if math.gcd(n_s, a_s) == 1:
            logging.debug(f"Coprime twist s={s} after {s - N} candidates")
            return s
    raise PlannerError(f"No coprime twist in ({N}, {N + max_tries}]", "search bound")


def find_even_twist(r: int, k: int, N: int) -> int:
    """Find the smallest s = 2k·s′ > N for the vector (r, h, 0) on a surface with h² = 2k.

    Then n_s = 1 + r·s and a_s = 2k·s + r·k·s² are coprime, as no prime dividing k divides
    1 + 2k·s′·r, and a_s is a multiple of 2k.

    Args:
        r (int): The rank, at least 1.
        k (int): Half the square of h, at least 1.
        N (int): The strict lower bound of s.

    Raises:
        PlannerError: If r < 1 or k < 1.

    Returns:
        int: The twist s.
    """
    if r < 1 or k < 1:
        raise PlannerError(f"Even twist needs r, k >= 1, got r={r}, k={k}", "range")
    s = 2 * k * (N // (2 * k) + 1)
    n_s, a_s = twisted_coefficients(r, 1, 0, k, s)
    assert math.gcd(n_s, a_s) == 1 and a_s % (2 * k) == 0
    return s
