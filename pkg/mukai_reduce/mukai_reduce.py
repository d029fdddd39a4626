# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import logging
from typing import Any

# Local imports
from .mukai import Triple, triple_from_dic
from .oracles import Gate, SweepBounds, SweepResult, resolve_workers, sweep_numeri
from .planner import Path, Report, path_from_dic, path_to_dic, reduce_to_canonical, verify_path
from .utils import load_configuration, load_json_from_path, nested_get, write_json_to_path


# ==================================================================================================
# --- Main functions
# ==================================================================================================
def load_triple(path_triple: str, allow_raw: bool = False) -> Triple:
    """Load and validate a triple from a JSON file {"surface", "v", "H"}."""
    return triple_from_dic(load_json_from_path(path_triple), allow_raw=allow_raw)


def reduce(
    path_triple: str, path_out: str | None = None, config: dict[str, Any] | None = None
) -> Path:
    """
    Reduce the triple stored in a JSON file to its canonical triple.

    Args:
        path_triple (str): Path to the triple.
        path_out (str | None, optional): Where to write the path as JSON. Defaults to None.
        config (dict[str, Any] | None, optional): Run configuration. Defaults to the template
            configuration.

    Returns:
        Path: The certified path.
    """
    logging.info(f"Reduce triple from {path_triple}")
    p = reduce_to_canonical(load_triple(path_triple), config=config)
    if path_out is not None:
        write_json_to_path(path_to_dic(p), path_out)
        logging.info(f"Path of {len(p)} moves written to {path_out}")
    return p


def verify(path_path: str) -> Report:
    """Replay a path stored in a JSON file."""
    logging.info(f"Verify path from {path_path}")
    return verify_path(path_from_dic(load_json_from_path(path_path)))


def sweep(
    bounds: SweepBounds,
    gate: Gate | str = Gate.STRICT,
    workers: int | None = None,
    config: dict[str, Any] | None = None,
) -> SweepResult:
    """Run the inequality sweep with the worker count and chunk size of the configuration."""
    if config is None:
        config = load_configuration()
    return sweep_numeri(
        bounds,
        gate=gate,
        workers=resolve_workers(workers, config),
        chunk_size=int(nested_get(config, ["sweep", "chunk_size"])),
    )
