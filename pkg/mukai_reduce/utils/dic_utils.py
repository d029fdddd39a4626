"""
This module provides utility functions for handling nested dictionaries, YAML configuration
files and JSON documents.

Functions:
    load_dic_from_path(path: str, ryaml: ruamel.yaml.YAML | None = None)
        -> tuple[dict, ruamel.yaml.YAML]:
        Load a dictionary from a YAML file.

    nested_get(dic: dict, keys: list) -> Any:
        Get the value from a nested dictionary using a list of keys.

    merge_dic(dic_base: dict, dic_override: dict) -> dict:
        Recursively override the values of a nested dictionary.

    clean_dic(o: Any) -> Any:
        Convert numpy and ruamel types to plain Python types.

    load_json_from_path(path: str) -> Any:
        Load a JSON document.

    write_json_to_path(obj: Any, path: str) -> None:
        Write a JSON document in a byte-stable layout.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
import json
import os
from typing import Any

# Import third-party modules
import numpy as np
import pandas as pd
import ruamel.yaml

# ==================================================================================================
# --- Function definition
# ==================================================================================================


def load_dic_from_path(
    path: str, ryaml: ruamel.yaml.YAML | None = None
) -> tuple[dict, ruamel.yaml.YAML]:
    """Load a dictionary from a yaml file.

    Args:
        path (str): The path to the yaml file.
        ryaml (ruamel.yaml.YAML): The yaml reader.

    Returns:
        tuple[dict, ruamel.yaml.YAML]: The dictionary and the yaml reader.

    """

    if ryaml is None:
        # Initialize yaml reader
        ryaml = ruamel.yaml.YAML()

    # Load dic
    with open(path, "r") as fid:
        dic = ryaml.load(fid)

    return dic, ryaml


def nested_get(dic: dict, keys: list) -> Any:
    """Get the value from a nested dictionary using a list of keys.

    Args:
        dic (dict): The nested dictionary.
        keys (list): The list of keys to traverse the nested dictionary.

    Returns:
        Any: The value corresponding to the keys in the nested dictionary.

    """
    for key in keys:
        dic = dic[key]
    return dic


def merge_dic(dic_base: dict, dic_override: dict) -> dict:
    """Return a copy of dic_base where every key present in dic_override has been overridden.
    Nested dictionaries are merged recursively.

    Args:
        dic_base (dict): The reference dictionary (e.g. a template configuration).
        dic_override (dict): The user dictionary.

    Returns:
        dict: The merged dictionary.
    """
    dic_merged = {key: value for key, value in dic_base.items()}
    for key, value in dic_override.items():
        if isinstance(value, dict) and isinstance(dic_merged.get(key), dict):
            dic_merged[key] = merge_dic(dic_merged[key], value)
        else:
            dic_merged[key] = value
    return dic_merged


def clean_dic(o: Any) -> Any:
    """Convert numpy scalars and ruamel containers to standard types, recursively.

    Args:
        o (Any): The object to convert.

    Returns:
        Any: The converted object.
    """
    if isinstance(o, dict):
        return {str(k): clean_dic(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [clean_dic(x) for x in o]
    if isinstance(o, np.generic):
        return o.item()
    # Missing values of nullable integer columns
    if o is pd.NA:
        return None
    return o


def load_json_from_path(path: str) -> Any:
    with open(path, "r") as fid:
        return json.load(fid)


def dumps_json(obj: Any) -> str:
    """Serialize to JSON with a fixed layout, so that identical inputs give identical bytes."""
    return json.dumps(clean_dic(obj), indent=2, ensure_ascii=False) + "\n"


def write_json_to_path(obj: Any, path: str) -> None:
    with open(path, "w") as fid:
        fid.write(dumps_json(obj))
        fid.flush()
        os.fsync(fid.fileno())
