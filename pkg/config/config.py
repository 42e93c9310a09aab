from typing import Any, Union, List, Dict, Optional
from ast import literal_eval
from pathlib import Path
import yaml

DEFAULT_CONFIG_PATH = Path(__file__).parent / "verify.yaml"


class ConfigManager:
    """Loads the verification settings: a base YAML file plus named subconfigs, one per section.

    Sections live in directories next to the base file (e.g. config/tolerances/default.yaml) and
    are merged under their section key.

    `get`, `_convert_value` and `merge_configs` are plain YAML plumbing and know nothing about
    verification. `get_section` reads a whole section minus excluded keys (the sampling profile),
    `tolerance` is the strict per-suite lookup and `default` loads the shipped profiles.
    """

    def __init__(self, config_path: Union[str, Path] = DEFAULT_CONFIG_PATH):
        self.config_dir = Path(config_path).parent
        self.config = self.load_yaml(config_path) or {}

    @staticmethod
    def load_yaml(file_path: Union[str, Path]) -> Dict[str, Any]:
        with open(file_path, "r") as f:
            return yaml.safe_load(f)

    def get(self, key: str, default: Any = None) -> Any:
        """Retrieves a value from the configuration.

        Handles nested (dotted) keys, type conversion, and default values.
        """
        keys = key.split(".")
        value = self.config
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
                if value is None:
                    return default
            else:
                return default
        return self._convert_value(value)

    def _convert_value(self, value: Any) -> Union[int, float, bool, str, list, None]:
        """Converts a value to the appropriate Python type.

        YAML reads exponent-only floats such as 1e-12 as strings, so those go through literal_eval.
        """
        if not isinstance(value, str):
            return value

        try:
            return literal_eval(value)
        except (ValueError, SyntaxError):
            pass

        lower_value = value.lower()
        if lower_value in {"true", "yes", "on"}:
            return True
        if lower_value in {"false", "no", "off"}:
            return False

        return value

    def get_section(self, key: str, exclude: Union[str, List[str], None] = None) -> Dict[str, Any]:
        """Retrieves all (converted) fields of a section, optionally excluding some keys."""
        if isinstance(exclude, str):
            exclude = [exclude]
        elif exclude is None:
            exclude = []

        nested_dict = self.get(key, {})
        if not isinstance(nested_dict, dict):
            return {}
        return {
            k: self._convert_value(v) for k, v in nested_dict.items() if k not in exclude
        }

    def merge_configs(
        self, config1: Dict[str, Any], config2: Dict[str, Any]
    ) -> Dict[str, Any]:
        """Merges two configuration dictionaries, the second one winning on conflicts."""
        merged = config1.copy()
        for key, value in config2.items():
            if isinstance(value, dict) and isinstance(merged.get(key), dict):
                merged[key] = self.merge_configs(merged[key], value)
            else:
                merged[key] = value
        return merged

    def load_subconfig(self, subconfig_name: str, section: str) -> Dict[str, Any]:
        subconfig_path = self.config_dir / section / f"{subconfig_name}.yaml"
        return self.load_yaml(subconfig_path) or {}

    def create_config(self, subconfigs: Dict[str, Optional[str]]) -> None:
        """Merges the named subconfigs into the base config.

        A None name falls back to the one listed under `sections` in the base file.
        """
        for section, subconfig_name in subconfigs.items():
            subconfig_name = subconfig_name or self.get(f"sections.{section}")
            if subconfig_name:
                subconfig = self.load_subconfig(subconfig_name, section)
                self.config = self.merge_configs(self.config, {section: subconfig})

    def tolerance(self, suite: str) -> float:
        value = self.get(f"tolerances.{suite}")
        if value is None:
            raise KeyError(f"no tolerance configured for suite {suite!r}")
        return float(value)

    @classmethod
    def default(
        cls, tolerances: Optional[str] = None, sampling: Optional[str] = None
    ) -> "ConfigManager":
        config = cls(DEFAULT_CONFIG_PATH)
        config.create_config({"tolerances": tolerances, "sampling": sampling})
        return config
