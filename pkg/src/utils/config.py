import os
from pathlib import Path
from typing import Any, NotRequired, TypedDict, cast

import yaml

from src import default_config_path


class ProbeDict(TypedDict):
    p: int
    k: int
    length: int
    trials: int
    max_edges: int


class ConfigDict(TypedDict):
    '''
    Configuration dictionary for the contraction toolkit.

    Required Fields:
        max_model_vertices (int): Largest host vertex count accepted by the exact
            model search. Larger hosts raise SizeBoundExceeded.
        max_oracle_edges (int): Largest host edge sum (multiplicities counted)
            accepted by the brute-force oracle and closure enumeration.
        seed (int): Default seed for the property suites and the probe.
        path (Path | str): Path to the configuration file. Added automatically by
            get_config_dict.

    Optional Fields:
        props_budget (float): Multiplier applied to every suite's trial count.

        probe (ProbeDict): Defaults for `probe`: component bound p, bond bound k,
            sequence length, number of trials and the sampler's edge cap.
    '''

    # Required fields
    max_model_vertices: int
    max_oracle_edges: int
    seed: int
    path: Path | str

    # Optional fields
    props_budget: NotRequired[float]
    probe: NotRequired[ProbeDict]


_PROBE_FIELDS = ('p', 'k', 'length', 'trials', 'max_edges')


def validate_config(config: ConfigDict) -> ConfigDict:
    '''
    Validate configuration dictionary and return typed ConfigDict.

    Checks that all required fields are present and have correct types, and
    that every bound is positive. All problems are reported together.

    Args:
        config: Raw configuration dictionary from YAML file.

    Returns:
        ConfigDict: Validated and typed configuration dictionary.

    Raises:
        ValueError: If required fields are missing or have invalid values.
    '''
    required_fields = {
        'max_model_vertices': int,
        'max_oracle_edges': int,
        'seed': int,
    }

    missing_fields = []
    type_errors = []

    for field, expected_type in required_fields.items():
        if field not in config:
            missing_fields.append(field)
        else:
            field_value = cast(Any, config.get(field))
            if isinstance(field_value, bool) or not isinstance(
                field_value, expected_type
            ):
                actual_type = type(field_value).__name__
                type_errors.append(
                    f'{field}: expected {expected_type.__name__}, got {actual_type}'
                )

    for field in ('max_model_vertices', 'max_oracle_edges'):
        value = config.get(field)
        if isinstance(value, int) and value < 1:
            type_errors.append(f'{field}: must be positive, got {value}')

    if 'props_budget' in config:
        budget = cast(Any, config['props_budget'])
        if not isinstance(budget, (int, float)) or budget <= 0:
            type_errors.append(f'props_budget: must be a positive number, got {budget}')

    if 'probe' in config:
        probe = cast(Any, config['probe'])
        if not isinstance(probe, dict):
            type_errors.append('probe: expected mapping')
        else:
            for field in _PROBE_FIELDS:
                if field not in probe:
                    missing_fields.append(f'probe.{field}')
                elif (
                    isinstance(probe[field], bool)
                    or not isinstance(probe[field], int)
                    or probe[field] < (0 if field == 'k' else 1)
                ):
                    type_errors.append(
                        f'probe.{field}: must be a positive int, got {probe[field]}'
                    )

    errors = []
    if missing_fields:
        errors.append(f'Missing required fields: {", ".join(missing_fields)}')
    if type_errors:
        errors.append('Type/validation errors: ' + '; '.join(type_errors))

    if errors:
        raise ValueError('Configuration validation failed:\n' + '\n'.join(errors))

    return config


def get_config_dict(config_path: Path | str | None = None) -> ConfigDict:
    '''
    Load, parse, and validate a YAML configuration file.

    Args:
        config_path: Path to the YAML configuration file. Falls back to the
            CONFIG_PATH environment variable, then to src/config/defaults.yml.

    Returns:
        ConfigDict: Validated configuration dictionary with 'path' field added.

    Raises:
        FileNotFoundError: If the config file doesn't exist.
        ValueError: If configuration validation fails.
        yaml.YAMLError: If YAML parsing fails.
    '''
    if config_path is None:
        config_path = os.getenv('CONFIG_PATH') or default_config_path

    config_path_obj = Path(config_path)
    with config_path_obj.open('r') as yaml_in:
        yaml_object = yaml.safe_load(yaml_in)

    if yaml_object is None:
        raise ValueError(f'Configuration file {config_path_obj} is empty or invalid')

    yaml_object['path'] = config_path_obj

    return validate_config(yaml_object)
