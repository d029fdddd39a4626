# ==================================================================================================
# --- Imports
# ==================================================================================================

# Standard library imports
import importlib.metadata

# Local imports
from .lattice import DivisorClass, Kind, SurfaceClass, elliptic, preset, rank1
from .moves import apply, connect_via_elliptic
from .mukai import MukaiVector, Triple, make_triple
from .mukai_reduce import load_triple, reduce, sweep, verify
from .oracles import SweepBounds, classify, sweep_numeri
from .planner import Path, Report, reduce_to_canonical, verify_path

# ==================================================================================================
# --- Package version
# ==================================================================================================
try:
    __version__ = importlib.metadata.version("mukai-reduce")
except importlib.metadata.PackageNotFoundError:
    __version__ = "unknown"

__all__ = [
    "DivisorClass",
    "Kind",
    "SurfaceClass",
    "elliptic",
    "preset",
    "rank1",
    "apply",
    "connect_via_elliptic",
    "MukaiVector",
    "Triple",
    "make_triple",
    "load_triple",
    "reduce",
    "sweep",
    "verify",
    "SweepBounds",
    "classify",
    "sweep_numeri",
    "Path",
    "Report",
    "reduce_to_canonical",
    "verify_path",
    "__version__",
]
