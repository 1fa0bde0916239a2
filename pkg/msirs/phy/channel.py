""" Dispersive channel with AWGN and periodic burst noise

The channel is a real FIR filter h[0..M] with a dominant first tap (postcursor ISI only).
Noise is added at the receiver, after the channel:

* AWGN on every sample, at SNR
* burst noise, another Gaussian, at SBR, on samples of mapper symbols inside the periodic burst:
  mapper symbol j is hit when (j - burst_phase) mod burst_period < burst_duration.
  Both line samples of a hit mapper symbol get burst noise.

Noise power is relative to P_SIG: the mean square of the PAM3 alphabet as transmitted.
"""
from __future__ import annotations

import math
from typing import List, Optional

import numpy as np
import scipy.signal
from pydantic import BaseModel, BaseConfig, Extra, validator, root_validator

from .pam3 import SAMPLES_PER_GROUP

# Mean square of the transmitted samples: levels -1, 0, +1 occur 3:2:3 over the 8 mapper entries
P_SIG = 0.75

# A stand-in dispersive channel with a dominant first tap. Not measured from anything.
DEFAULT_TAPS = (1.0, 0.45, 0.25, 0.12, 0.05)


class ChannelConfig(BaseModel):
    """ Channel and noise parameters """
    # FIR channel response; |taps[0]| must dominate
    taps: List[float] = list(DEFAULT_TAPS)

    # Signal to (AWGN) noise ratio, dB. None: no AWGN
    snr_db: Optional[float] = 30.0

    # Signal to burst noise ratio, dB. None: no burst noise
    sbr_db: Optional[float] = None

    # Burst timing, in mapper symbols (3-bit groups)
    burst_duration: int = 0
    burst_period: int = 5400
    burst_phase: int = 0

    # Experiment seed
    seed: int = 0

    class Config(BaseConfig):
        # Forbid extra attributes
        extra = Extra.forbid

    @validator('taps')
    def taps_dominant_first(cls, v: List[float]):
        if not v:
            raise ValueError('Channel taps must not be empty')
        if any(abs(h) > abs(v[0]) for h in v[1:]) or v[0] == 0:
            raise ValueError(f'The first channel tap must dominate: {v}')
        return v

    @validator('burst_duration', 'burst_phase', 'seed')
    def non_negative(cls, v: int, field):
        if v < 0:
            raise ValueError(f'{field.name} must be non-negative: {v}')
        return v

    @validator('burst_period')
    def positive_period(cls, v: int):
        if v < 1:
            raise ValueError(f'burst_period must be positive: {v}')
        return v

    @root_validator(skip_on_failure=True)
    def burst_fits_period(cls, values: dict):
        if values['burst_duration'] > values['burst_period']:
            raise ValueError(f"burst_duration={values['burst_duration']} exceeds burst_period={values['burst_period']}")
        return values

    @property
    def noise_variance(self) -> float:
        """ AWGN variance per sample """
        return noise_variance(self.snr_db)

    @property
    def burst_variance(self) -> float:
        """ Burst noise variance per hit sample """
        return noise_variance(self.sbr_db) if self.burst_duration else 0.0


def noise_variance(ratio_db: Optional[float]) -> float:
    """ Noise variance for a signal-to-noise ratio in dB. None or +inf: no noise """
    if ratio_db is None or math.isinf(ratio_db):
        return 0.0
    return P_SIG * 10 ** (-ratio_db / 10)


def channel_apply(samples: np.ndarray, taps) -> np.ndarray:
    """ Pass samples through the FIR channel. Starts from rest; the tail is truncated """
    return scipy.signal.lfilter(np.asarray(taps, dtype=float), [1.0], np.asarray(samples, dtype=float))


def burst_mask(n_symbols: int, cfg: ChannelConfig, symbol_offset: int = 0) -> np.ndarray:
    """ Which mapper symbols are hit by the burst

    Args:
        n_symbols: mapper symbols to cover
        cfg: burst timing
        symbol_offset: index of the first of them on the transmission timeline
    """
    j = symbol_offset + np.arange(n_symbols, dtype=np.int64)
    return (j - cfg.burst_phase) % cfg.burst_period < cfg.burst_duration


def noise_inject(samples: np.ndarray, cfg: ChannelConfig, rng: np.random.Generator, symbol_offset: int = 0) -> np.ndarray:
    """ Add AWGN and burst noise to received samples

    Both noise sequences are always drawn, even when disabled:
    the same rng state gives the same noise for any SNR/SBR, only scaled.

    Args:
        samples: channel output; SAMPLES_PER_GROUP samples per mapper symbol
        cfg: noise parameters
        rng: random generator
        symbol_offset: index of the first mapper symbol on the transmission timeline
    """
    samples = np.asarray(samples, dtype=float)
    awgn = rng.standard_normal(samples.size)
    burst = rng.standard_normal(samples.size)

    mask = np.repeat(burst_mask(-(-samples.size // SAMPLES_PER_GROUP), cfg, symbol_offset), SAMPLES_PER_GROUP)
    mask = mask[:samples.size]
    return samples + math.sqrt(cfg.noise_variance) * awgn + math.sqrt(cfg.burst_variance) * burst * mask
