"""YAML <-> dataclass contract conversion.

Converters are driven by the contract's type hints so nested contracts and
lists of contracts come back as dataclass instances.
"""

import logging
from dataclasses import asdict, fields, is_dataclass
from pathlib import Path
from typing import Any, Dict, Type, TypeVar, Union, get_args, get_origin, get_type_hints

import yaml

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def convert_dict_to_dataclass(dataclass_type: Type[T], data: Dict[str, Any]) -> T:
    """Convert a mapping to a dataclass instance, handling nested dataclasses and lists.

    Raises:
        ConfigurationError: If the mapping has keys the contract does not declare,
            or the dataclass cannot be instantiated with the provided data
    """
    if not is_dataclass(dataclass_type):
        raise ValueError(f"{dataclass_type} is not a dataclass")
    if not isinstance(data, dict):
        raise ConfigurationError(
            f"Expected a mapping for {dataclass_type.__name__}, got {type(data).__name__}"
        )

    type_hints = get_type_hints(dataclass_type)
    known = {f.name for f in fields(dataclass_type)}
    unknown = sorted(str(key) for key in data if key not in known)
    if unknown:
        raise ConfigurationError(
            f"Unknown keys for {dataclass_type.__name__}: {', '.join(unknown)}"
        )

    converted_data = {
        name: convert_value_to_type(value, type_hints[name]) for name, value in data.items()
    }
    try:
        return dataclass_type(**converted_data)
    except TypeError as e:
        raise ConfigurationError(f"Invalid {dataclass_type.__name__}: {e}") from e


def convert_value_to_type(value: Any, target_type: Any) -> Any:
    """Convert a value to the target type, handling Optional, List and Dict."""
    if value is None:
        return None

    origin_type = get_origin(target_type)

    if origin_type is Union:
        # Optional[X]: convert against the first non-None member
        members = [arg for arg in get_args(target_type) if arg is not type(None)]
        return convert_value_to_type(value, members[0]) if members else value

    if origin_type is list or target_type is list:
        if not isinstance(value, list):
            raise ConfigurationError(f"Expected a list, got {type(value).__name__}")
        type_args = get_args(target_type)
        if type_args:
            return [convert_value_to_type(item, type_args[0]) for item in value]
        return value

    if origin_type is dict:
        if not isinstance(value, dict):
            raise ConfigurationError(f"Expected a mapping, got {type(value).__name__}")
        type_args = get_args(target_type)
        if len(type_args) == 2:
            return {key: convert_value_to_type(item, type_args[1]) for key, item in value.items()}
        return value

    if is_dataclass(target_type):
        return convert_dict_to_dataclass(target_type, value)

    if target_type is float and isinstance(value, int) and not isinstance(value, bool):
        return float(value)
    if target_type in (int, float, str, bool) and not isinstance(value, target_type):
        raise ConfigurationError(
            f"Expected {target_type.__name__}, got {type(value).__name__} ({value!r})"
        )
    if target_type is int and isinstance(value, bool):
        raise ConfigurationError(f"Expected int, got bool ({value!r})")

    return value


def load_yaml_file(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            return yaml.safe_load(f)
    except FileNotFoundError:
        raise ConfigurationError(f"File not found: {path}") from None
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Malformed YAML in {path}: {e}") from e


def load_yaml_contract(path: Union[str, Path], contract_type: Type[T]) -> T:
    """Read a YAML document and convert it into ``contract_type``.

    An empty document yields the contract's defaults.
    """
    data = load_yaml_file(path)
    logger.debug(f"Loaded {contract_type.__name__} from {path}")
    return convert_dict_to_dataclass(contract_type, data or {})


def contract_to_dict(contract: Any) -> Dict[str, Any]:
    return asdict(contract)


def dump_yaml(data: Any) -> str:
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=False)
