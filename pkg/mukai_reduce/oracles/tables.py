"""
This module assembles the dimension and codimension formulas into tables.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Third party imports
import pandas as pd

# Local imports
from mukai_reduce.lattice import Kind
from mukai_reduce.mukai import moduli_dims

from .numerics import OracleError, codim_reducible, dim_linear_system


# ==================================================================================================
# --- Tables
# ==================================================================================================
def dimension_table(m_max: int, k_max: int) -> pd.DataFrame:
    """One row per (kind, m, k) with 1 ≤ m ≤ m_max and 1 ≤ k ≤ k_max.

    Columns: dim_M and dim_K, dim_mH the dimension of |mH|, codim_reducible the smallest
    codimension of the reducible curves in |mH| (missing for m = 1) and codim_at_least_2.

    Args:
        m_max (int): Largest multiplicity.
        k_max (int): Largest k.

    Returns:
        pd.DataFrame: The table, sorted by kind, m and k.
    """
    if m_max < 1 or k_max < 1:
        raise OracleError(f"dimension_table needs m_max, k_max >= 1, got {m_max}, {k_max}")
    l_rows = []
    for kind in Kind:
        for m in range(1, m_max + 1):
            for k in range(1, k_max + 1):
                dim_M, dim_K = moduli_dims(m, k, kind)
                codim = codim_reducible(kind, m, k)
                l_rows.append(
                    {
                        "kind": kind.value,
                        "m": m,
                        "k": k,
                        "dim_M": dim_M,
                        "dim_K": dim_K,
                        "dim_mH": dim_linear_system(kind, k, m),
                        "codim_reducible": codim,
                        "codim_at_least_2": codim is None or codim >= 2,
                    }
                )
    df = pd.DataFrame(l_rows)
    df["dim_K"] = df["dim_K"].astype("Int64")
    df["codim_reducible"] = df["codim_reducible"].astype("Int64")
    return df
