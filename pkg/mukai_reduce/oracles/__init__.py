# ==================================================================================================
# --- Imports
# ==================================================================================================
from .classification import (
    BETTI_NUMBERS,
    ClassificationReport,
    VarietyClass,
    albanese_dimension,
    beauville_signature,
    betti_table,
    classify,
)
from .numeri import (
    Gate,
    NumeriTuple,
    SweepBounds,
    SweepResult,
    conclusion_holds,
    gate_threshold,
    hypotheses_hold,
    resolve_workers,
    sweep_numeri,
)
from .numerics import (
    OracleError,
    codim_reducible,
    dim_linear_system,
    reflexive_form_dims,
    top_degree,
)
from .tables import dimension_table

__all__ = [
    "BETTI_NUMBERS",
    "ClassificationReport",
    "VarietyClass",
    "albanese_dimension",
    "beauville_signature",
    "betti_table",
    "classify",
    "Gate",
    "NumeriTuple",
    "SweepBounds",
    "SweepResult",
    "conclusion_holds",
    "gate_threshold",
    "hypotheses_hold",
    "resolve_workers",
    "sweep_numeri",
    "OracleError",
    "codim_reducible",
    "dim_linear_system",
    "reflexive_form_dims",
    "top_degree",
    "dimension_table",
]
