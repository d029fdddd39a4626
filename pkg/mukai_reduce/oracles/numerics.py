"""
This module contains the closed dimension formulas of the moduli spaces attached to an
(m,k)-triple: linear systems on the rank-1 surface, codimension of the locus of reducible curves,
and dimensions of the spaces of reflexive forms.

Functions:
    dim_linear_system(kind, k, p) -> int:
        Dimension of the linear system |pH| with H² = 2k.

    codim_reducible(kind, m, k) -> int | None:
        Smallest codimension in |mH| of the curves splitting as m₁H + m₂H.

    reflexive_form_dims(m, k, p, kind) -> int:
        Dimension of the reflexive p-forms on M_v (K3) or K_v (Abelian).
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Local imports
from mukai_reduce.lattice import Kind


# ==================================================================================================
# --- Errors
# ==================================================================================================
class OracleError(ValueError):
    """Raised on arguments outside the range of a formula."""

    def __init__(self, message: str, condition: str = "range"):
        super().__init__(message)
        self.condition = condition


# ==================================================================================================
# --- Formulas
# ==================================================================================================
def dim_linear_system(kind: Kind | str, k: int, p: int) -> int:
    """Dimension of |pH| on a rank-1 surface with H² = 2k: 1 + kp² (K3) or kp² − 1 (Abelian).

    Args:
        kind (Kind | str): The kind of surface.
        k (int): Half the square of H, at least 1.
        p (int): The multiple of H, at least 1.

    Raises:
        OracleError: If k < 1 or p < 1.

    Returns:
        int: The projective dimension.
    """
    kind = Kind.parse(kind)
    if k < 1 or p < 1:
        raise OracleError(f"dim_linear_system needs k, p >= 1, got k={k}, p={p}")
    if kind is Kind.K3:
        return 1 + k * p * p
    return k * p * p - 1


def codim_reducible(kind: Kind | str, m: int, k: int) -> int | None:
    """Codimension in |mH| of the reducible curves, or None for m = 1 where there are none.

    A splitting m = m₁ + m₂ gives a locus of codimension 2m₁m₂k − 1, with the same value on both
    kinds; the minimum is reached at m₁ = 1 and equals 2(m−1)k − 1.

    Args:
        kind (Kind | str): The kind of surface.
        m (int): The multiplicity, at least 1.
        k (int): Half the square of H, at least 1.

    Raises:
        OracleError: If m < 1 or k < 1.

    Returns:
        int | None: The smallest codimension.
    """
    Kind.parse(kind)
    if m < 1 or k < 1:
        raise OracleError(f"codim_reducible needs m, k >= 1, got m={m}, k={k}")
    if m == 1:
        return None
    return min(2 * m1 * (m - m1) * k - 1 for m1 in range(1, m))


def top_degree(m: int, k: int, kind: Kind | str) -> int:
    """Dimension of M_v (K3) or of K_v (Abelian), the top degree of the reflexive forms."""
    kind = Kind.parse(kind)
    return 2 * m * m * k + 2 if kind is Kind.K3 else 2 * m * m * k - 2


def reflexive_form_dims(m: int, k: int, p: int, kind: Kind | str = Kind.K3) -> int:
    """Dimension of H⁰ of the reflexive p-forms: 1 for even p, 0 for odd p.

    Args:
        m (int): The multiplicity, at least 1.
        k (int): Half the square of the primitive part, at least 1.
        p (int): The degree, between 0 and the dimension of M_v (K3) or K_v (Abelian).
        kind (Kind | str, optional): Selects the variety. Defaults to Kind.K3.

    Raises:
        OracleError: If p is out of range.

    Returns:
        int: 1 or 0.
    """
    if m < 1 or k < 1:
        raise OracleError(f"reflexive_form_dims needs m, k >= 1, got m={m}, k={k}")
    top = top_degree(m, k, kind)
    if not 0 <= p <= top:
        raise OracleError(f"p = {p} is outside [0, {top}]")
    return 1 if p % 2 == 0 else 0
