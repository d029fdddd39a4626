# ==================================================================================================
# --- Imports
# ==================================================================================================
from .dic_utils import (
    clean_dic,
    dumps_json,
    load_dic_from_path,
    load_json_from_path,
    merge_dic,
    nested_get,
    write_json_to_path,
)
from .template_utils import (
    load_configuration,
    load_template_configuration_as_dic,
    path_asset,
    render_template,
)

__all__ = [
    "load_dic_from_path",
    "nested_get",
    "merge_dic",
    "clean_dic",
    "dumps_json",
    "load_json_from_path",
    "write_json_to_path",
    "load_configuration",
    "load_template_configuration_as_dic",
    "path_asset",
    "render_template",
]
