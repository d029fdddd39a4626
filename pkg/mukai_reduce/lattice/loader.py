"""
This module loads surfaces from human-authored files (TOML or YAML) and converts surfaces to and
from plain dictionaries for JSON interchange.

Functions:
    surface_from_dic(dic_surface: dict) -> SurfaceClass:
        Build a surface from a dictionary with keys kind, gram, basis_labels, ample_ref,
        effective_gens and optionally name.

    load_surface_from_path(path: str) -> SurfaceClass:
        Load a surface from a .toml, .yaml or .yml file.

    surface_to_json_value(S: SurfaceClass) -> str | dict:
        Preset name if S is a preset, inline dictionary otherwise.

    surface_from_json_value(value: str | dict) -> SurfaceClass:
        Inverse of surface_to_json_value.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
import os

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from typing import Any

# Import user-defined modules
from mukai_reduce.utils.dic_utils import load_dic_from_path

from .surface import DivisorClass, Kind, LatticeError, SurfaceClass, is_preset, preset

# ==================================================================================================
# --- Functions
# ==================================================================================================
_REQUIRED_KEYS = ("kind", "gram", "basis_labels", "ample_ref")


def surface_from_dic(dic_surface: dict[str, Any], default_name: str = "custom") -> SurfaceClass:
    """Build a surface from a dictionary.

    Args:
        dic_surface (dict[str, Any]): The surface description. If it only holds a "preset" key,
            the corresponding preset is returned.
        default_name (str, optional): Name used when the dictionary has no "name" key.
            Defaults to "custom".

    Raises:
        LatticeError: If a key is missing or malformed, with the name of the field.

    Returns:
        SurfaceClass: The surface.
    """
    if "preset" in dic_surface:
        return preset(str(dic_surface["preset"]))

    for key in _REQUIRED_KEYS:
        if key not in dic_surface:
            raise LatticeError(f"Missing field '{key}' in surface description", key)

    try:
        gram = tuple(tuple(int(x) for x in row) for row in dic_surface["gram"])
        ample_ref = DivisorClass(dic_surface["ample_ref"])
        effective_gens = tuple(DivisorClass(E) for E in dic_surface.get("effective_gens", []))
        basis_labels = tuple(str(label) for label in dic_surface["basis_labels"])
    except (TypeError, ValueError) as e:
        raise LatticeError(f"Malformed surface description: {e}", "format") from e

    return SurfaceClass(
        name=str(dic_surface.get("name", default_name)),
        kind=Kind.parse(dic_surface["kind"]),
        gram=gram,
        basis_labels=basis_labels,
        ample_ref=ample_ref,
        effective_gens=effective_gens,
    )


def load_surface_from_path(path: str) -> SurfaceClass:
    """Load a surface from a TOML or YAML file.

    Args:
        path (str): Path to the file. The extension selects the reader.

    Returns:
        SurfaceClass: The surface. Its name defaults to the file stem.
    """
    default_name = os.path.splitext(os.path.basename(path))[0]
    if path.endswith(".toml"):
        with open(path, "rb") as fid:
            try:
                dic_surface = tomllib.load(fid)
            except tomllib.TOMLDecodeError as e:
                raise LatticeError(f"Malformed TOML in {path}: {e}", "format") from e
    elif path.endswith((".yaml", ".yml")):
        dic_surface, _ = load_dic_from_path(path)
    else:
        raise LatticeError(f"Unknown surface file extension: {path}", "format")

    if not isinstance(dic_surface, dict):
        raise LatticeError(f"Surface file {path} does not hold a mapping", "format")
    return surface_from_dic(dict(dic_surface), default_name=default_name)


def surface_to_json_value(S: SurfaceClass) -> str | dict[str, Any]:
    if is_preset(S):
        return S.name
    return {
        "name": S.name,
        "kind": S.kind.value,
        "gram": [list(row) for row in S.gram],
        "basis_labels": list(S.basis_labels),
        "ample_ref": S.ample_ref.to_list(),
        "effective_gens": [E.to_list() for E in S.effective_gens],
    }


def surface_from_json_value(value: str | dict[str, Any]) -> SurfaceClass:
    if isinstance(value, str):
        return preset(value)
    if isinstance(value, dict):
        return surface_from_dic(value)
    raise LatticeError(f"Cannot read a surface from {value!r}", "surface")
