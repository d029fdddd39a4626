# ==================================================================================================
# --- Imports
# ==================================================================================================
from .walls import (
    NO_CURVES,
    Provenance,
    Suitability,
    Wall,
    WallError,
    is_generic,
    is_suitable,
    same_chamber,
    threshold_Md,
    wall_of_pair,
    walls_between,
)

__all__ = [
    "NO_CURVES",
    "Provenance",
    "Suitability",
    "Wall",
    "WallError",
    "is_generic",
    "is_suitable",
    "same_chamber",
    "threshold_Md",
    "wall_of_pair",
    "walls_between",
]
