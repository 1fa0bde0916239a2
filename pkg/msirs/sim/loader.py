""" Assemble an ExperimentConfig: preset, then config file, then overrides """
from __future__ import annotations

from pathlib import Path
from typing import Optional, Mapping, Any, Union

from .config import ExperimentConfig, ConfigError, parse_flat_config, apply_flat_config
from .presets import PRESETS


def load_config(path: Union[str, Path, None] = None, *,
                preset: Optional[str] = None,
                overrides: Mapping[str, Any] = None) -> ExperimentConfig:
    """ Load the experiment configuration

    Layers, later ones win:
    1. The preset: `preset`, or the file's `preset` key, or 'case1'
    2. The config file's keys
    3. `overrides`: flat keys, as in the file; `None` values are skipped

    Raises:
        ConfigError: unknown preset or key, malformed file
        pydantic.ValidationError: invalid values
        OSError: unreadable file
    """
    values = parse_flat_config(Path(path).read_text()) if path is not None else {}

    preset = preset or values.get('preset') or 'case1'
    try:
        base = PRESETS[preset]()
    except KeyError:
        raise ConfigError(f'Unknown preset: {preset!r}. Choose from: {", ".join(PRESETS)}') from None

    data = apply_flat_config(base.dict(), values)
    data = apply_flat_config(data, {key: value for key, value in (overrides or {}).items() if value is not None})
    return ExperimentConfig.parse_obj(data)
