import math

import numpy as np
import pydantic
import pytest

from msirs.phy import ChannelConfig, P_SIG, DEFAULT_TAPS, noise_variance, channel_apply, burst_mask, noise_inject


def test_config():
    cfg = ChannelConfig()
    assert cfg.taps == list(DEFAULT_TAPS)
    assert cfg.snr_db == 30
    assert cfg.sbr_db is None
    assert cfg.burst_variance == 0

    cfg = ChannelConfig(taps=[1, -0.5], snr_db=None, sbr_db=0, burst_duration=38, burst_period=5400, seed=7)
    assert cfg.noise_variance == 0
    assert cfg.burst_variance == P_SIG

    for bad in [
        dict(taps=[]),
        dict(taps=[0.5, 1.0]),
        dict(taps=[0]),
        dict(burst_duration=10, burst_period=5),
        dict(burst_period=0),
        dict(burst_phase=-1),
        dict(seed=-1),
        dict(unknown=1),
    ]:
        with pytest.raises(pydantic.ValidationError):
            ChannelConfig(**bad)


def test_noise_variance():
    assert noise_variance(30) == pytest.approx(7.5e-4)
    assert noise_variance(0) == pytest.approx(0.75)
    assert noise_variance(None) == 0
    assert noise_variance(math.inf) == 0


def test_channel_apply():
    assert channel_apply([1.0, -1.0, 0.0], [1.0]).tolist() == [1.0, -1.0, 0.0]
    assert channel_apply([1.0, -1.0], [1.0, 0.5]).tolist() == pytest.approx([1.0, -0.5])

    # Impulse response; the tail is truncated
    impulse = np.zeros(8)
    impulse[0] = 1
    assert channel_apply(impulse, DEFAULT_TAPS).tolist() == pytest.approx(list(DEFAULT_TAPS) + [0, 0, 0])
    assert channel_apply(impulse[:3], DEFAULT_TAPS).size == 3


def test_burst_mask():
    cfg = ChannelConfig(burst_duration=38, burst_period=5400)
    mask = burst_mask(5400 * 3, cfg)
    assert mask.sum() == 38 * 3
    assert mask[:38].all() and not mask[38:5400].any()

    # Phase shifts the burst; the offset places the symbols on the timeline
    cfg = ChannelConfig(burst_duration=3, burst_period=10, burst_phase=8)
    assert np.flatnonzero(burst_mask(20, cfg)).tolist() == [0, 8, 9, 10, 18, 19]
    assert np.flatnonzero(burst_mask(10, cfg, symbol_offset=5)).tolist() == [3, 4, 5]


def test_burst_fraction(rng: np.random.Generator):
    """ Over random spans of the timeline, the hit fraction is duration/period """
    cfg = ChannelConfig(burst_duration=38, burst_period=5400, burst_phase=123)
    n = 1_000_000
    hits = burst_mask(n, cfg, symbol_offset=int(rng.integers(0, 10 ** 6))).sum()
    p = 38 / 5400
    assert abs(hits - n * p) <= 3 * math.sqrt(n * p * (1 - p)) + 38


def test_noise_inject(rng: np.random.Generator):
    samples = np.tile([1.0, 0.0, -1.0, 1.0], 1000)

    # No noise at all
    cfg = ChannelConfig(snr_db=None, sbr_db=None)
    assert noise_inject(samples, cfg, rng).tolist() == samples.tolist()

    # AWGN only
    cfg = ChannelConfig(snr_db=10)
    noise = noise_inject(samples, cfg, np.random.default_rng(1)) - samples
    assert noise.var() == pytest.approx(0.075, rel=0.1)

    # Burst only: the first 10 mapper symbols = 20 samples
    cfg = ChannelConfig(snr_db=None, sbr_db=0, burst_duration=10, burst_period=5000)
    noise = noise_inject(samples, cfg, np.random.default_rng(1)) - samples
    assert np.flatnonzero(noise).max() < 20
    assert np.count_nonzero(noise[:20]) == 20

    # Same stream, same noise: only the scale differs
    a = noise_inject(samples, ChannelConfig(snr_db=20), np.random.default_rng(5)) - samples
    b = noise_inject(samples, ChannelConfig(snr_db=40), np.random.default_rng(5)) - samples
    assert a == pytest.approx(b * 10)
