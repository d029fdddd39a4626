# ==================================================================================================
# --- Imports
# ==================================================================================================

# Import standard library modules
import logging
import os
from typing import Any

# Import third-party modules
import ruamel.yaml
from jinja2 import Environment, FileSystemLoader

# Import user-defined modules
from .dic_utils import load_dic_from_path, merge_dic

PATH_ASSETS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "assets")


# ==================================================================================================
# --- Function definition
# ==================================================================================================
def load_template_configuration_as_dic(
    template_configuration_name: str = "config_reduce",
) -> tuple[dict, ruamel.yaml.YAML]:
    """Load a template configuration as a dictionary.

    Args:
        template_configuration_name (str): The name of the template configuration.
            Defaults to "config_reduce".

    Returns:
        tuple[dict, ruamel.yaml.YAML]: The template dictionary and the yaml reader.

    """
    # Add .yaml extension to template name
    if not template_configuration_name.endswith(".yaml"):
        template_configuration_name = f"{template_configuration_name}.yaml"

    path_template_config = os.path.join(PATH_ASSETS, "configurations", template_configuration_name)
    return load_dic_from_path(path_template_config)


def load_configuration(path_config: str | None = None) -> dict[str, Any]:
    """Load the run configuration: the template configuration, overridden by the user file.

    Args:
        path_config (str | None, optional): Path to a user YAML configuration. Defaults to None.

    Returns:
        dict[str, Any]: The merged configuration.
    """
    config, _ = load_template_configuration_as_dic()
    if path_config is None:
        return config
    logging.info(f"Load user configuration from {path_config}")
    config_user, _ = load_dic_from_path(path_config)
    return merge_dic(config, config_user or {})


def render_template(template_name: str, **kwargs: Any) -> str:
    """Render a text template from the assets folder.

    Args:
        template_name (str): The name of the template file in assets/templates.
        **kwargs: The variables passed to the template.

    Returns:
        str: The rendered text.
    """
    environment = Environment(
        loader=FileSystemLoader(os.path.join(PATH_ASSETS, "templates")),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    template = environment.get_template(template_name)
    return template.render(**kwargs)


def path_asset(*l_parts: str) -> str:
    return os.path.join(PATH_ASSETS, *l_parts)
