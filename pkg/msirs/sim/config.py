""" Experiment configuration: pydantic models and the flat key = value file format

File format:

    # Case 1, longer
    preset = case1
    frames = 2000
    sbr_min = 4
    sbr_max = 12
    taps = 1.0, 0.4, 0.1
    scheme.long = n=432 k=387 m=9 L=1 BL=1 decoder=single_pass
    scheme.ms = n=144 k=129 m=9 L=3 BL=6 decoder=two_pass

Any `scheme.*` key replaces the preset's list of schemes.
"""
from __future__ import annotations

from typing import List, Optional, Dict, Any

from pydantic import BaseModel, BaseConfig, Extra, validator, root_validator

from msirs.irs import DecoderKind, InterleaverConfig
from msirs.phy import ChannelConfig
from msirs.rs import RsCode, rs_code


class ConfigError(ValueError):
    """ Configuration file or override is wrong """


class ConfigModel(BaseModel):
    """ Base for configuration models """

    class Config(BaseConfig):
        # Forbid extra attributes
        extra = Extra.forbid


class SchemeConfig(ConfigModel):
    """ One scheme under test: code, interleaver, decoder """
    label: str
    n: int
    k: int
    m: int
    L: int = 1
    BL: int = 1
    decoder: DecoderKind = DecoderKind.SINGLE_PASS
    primitive_poly: Optional[int] = None

    @root_validator(skip_on_failure=True)
    def valid_geometry(cls, values: dict):
        # Both raise ValueError on bad parameters
        rs_code(values['n'], values['k'], values['m'], values['primitive_poly'])
        InterleaverConfig(values['L'], values['BL'], values['n'])
        return values

    @property
    def code(self) -> RsCode:
        return rs_code(self.n, self.k, self.m, self.primitive_poly)

    @property
    def interleaver(self) -> InterleaverConfig:
        return InterleaverConfig(self.L, self.BL, self.n)

    @property
    def info_bits(self) -> int:
        """ Message bits per frame """
        return self.L * self.k * self.m

    @property
    def transmit_signature(self) -> tuple:
        """ Schemes with equal signatures transmit identical frames and differ only in decoding """
        return (self.n, self.k, self.m, self.L, self.BL, self.primitive_poly)


class SbrSweep(ConfigModel):
    """ Signal-to-burst-noise ratio points, dB: min..max inclusive """
    min_db: float = 0.0
    max_db: float = 16.0
    step_db: float = 1.0

    @validator('step_db')
    def positive_step(cls, v: float):
        if v <= 0:
            raise ValueError(f'SBR step must be positive: {v}')
        return v

    @root_validator(skip_on_failure=True)
    def nonempty(cls, values: dict):
        if values['max_db'] < values['min_db']:
            raise ValueError(f"SBR sweep is empty: {values['min_db']} .. {values['max_db']}")
        return values

    def points(self) -> List[float]:
        count = int((self.max_db - self.min_db) / self.step_db + 1e-9) + 1
        return [round(self.min_db + i * self.step_db, 6) for i in range(count)]


class ExperimentConfig(ConfigModel):
    """ A complete simulation run """
    schemes: List[SchemeConfig]
    channel: ChannelConfig = ChannelConfig()
    sbr: SbrSweep = SbrSweep()
    frames_per_point: int = 200
    seed: int = 0
    workers: int = 1

    @validator('schemes')
    def unique_labels(cls, v: List[SchemeConfig]):
        if not v:
            raise ValueError('No schemes to simulate')
        labels = [scheme.label for scheme in v]
        if len(set(labels)) != len(labels):
            raise ValueError(f'Scheme labels must be unique: {labels}')
        return v

    @validator('frames_per_point', 'workers')
    def at_least_one(cls, v: int, field):
        if v < 1:
            raise ValueError(f'{field.name} must be at least 1: {v}')
        return v

    @validator('seed')
    def non_negative_seed(cls, v: int):
        if v < 0:
            raise ValueError(f'seed must be non-negative: {v}')
        return v

    @root_validator(skip_on_failure=True)
    def channel_seed(cls, values: dict):
        # The channel records the seed its noise comes from
        values['channel'] = values['channel'].copy(update={'seed': values['seed']})
        return values


# Flat key -> path in ExperimentConfig.dict()
FLAT_KEYS: Dict[str, tuple] = {
    'seed': ('seed',),
    'frames': ('frames_per_point',),
    'workers': ('workers',),
    'sbr_min': ('sbr', 'min_db'),
    'sbr_max': ('sbr', 'max_db'),
    'sbr_step': ('sbr', 'step_db'),
    'snr_db': ('channel', 'snr_db'),
    'taps': ('channel', 'taps'),
    'burst_duration': ('channel', 'burst_duration'),
    'burst_period': ('channel', 'burst_period'),
    'burst_phase': ('channel', 'burst_phase'),
}

# Scheme descriptor key -> SchemeConfig field
SCHEME_KEYS = {'n': 'n', 'k': 'k', 'm': 'm', 'L': 'L', 'BL': 'BL', 'decoder': 'decoder', 'poly': 'primitive_poly'}


def parse_flat_config(text: str) -> Dict[str, str]:
    """ Parse `key = value` lines. `#` starts a comment; blank lines are ignored

    Raises:
        ConfigError: a line without `=`, an empty key, a repeated key
    """
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition('=')
        key = key.strip()
        if not eq or not key:
            raise ConfigError(f'Line {lineno}: expected `key = value`, got {line!r}')
        if key in values:
            raise ConfigError(f'Line {lineno}: {key!r} is given twice')
        values[key] = value.strip()
    return values


def apply_flat_config(base: Dict[str, Any], values: Dict[str, Any]) -> Dict[str, Any]:
    """ Apply flat keys onto an ExperimentConfig.dict()

    String values are left for pydantic to convert, except where the flat format has its own syntax:
    `taps` is comma-separated, `snr_db = none` disables AWGN, `scheme.*` values are descriptors.

    Raises:
        ConfigError: unknown keys, malformed scheme descriptors
    """
    data = {
        key: (dict(value) if isinstance(value, dict) else value)
        for key, value in base.items()
    }
    schemes = []
    for key, value in values.items():
        if key == 'preset':
            continue
        elif key.startswith('scheme.'):
            schemes.append(parse_scheme(key[len('scheme.'):], value))
        elif key in FLAT_KEYS:
            *parents, name = FLAT_KEYS[key]
            target = data
            for parent in parents:
                target = target[parent]
            target[name] = _flat_value(key, value)
        else:
            raise ConfigError(f'Unknown configuration key: {key!r}')

    if schemes:
        data['schemes'] = schemes
    return data


def parse_scheme(label: str, descriptor: str) -> Dict[str, Any]:
    """ Parse a scheme descriptor: `n=144 k=129 m=9 L=3 BL=6 decoder=two_pass [poly=0x211]` """
    if not label:
        raise ConfigError('Scheme label is empty')
    scheme: Dict[str, Any] = {'label': label}
    for item in descriptor.split():
        name, eq, value = item.partition('=')
        if not eq or name not in SCHEME_KEYS:
            raise ConfigError(f'Scheme {label!r}: unknown item {item!r}')
        if name == 'poly':
            try:
                value = int(value, 0)
            except ValueError:
                raise ConfigError(f'Scheme {label!r}: bad polynomial {value!r}') from None
        scheme[SCHEME_KEYS[name]] = value
    return scheme


def _flat_value(key: str, value: Any) -> Any:
    if not isinstance(value, str):
        return value
    elif key == 'taps':
        return [item.strip() for item in value.split(',') if item.strip()]
    elif key == 'snr_db' and value.lower() == 'none':
        return None
    else:
        return value
