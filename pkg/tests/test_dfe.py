import numpy as np
import pytest

from msirs.phy import slice_level, dfe_equalize, channel_apply, noise_inject, burst_mask, symbols_to_levels
from msirs.phy import ChannelConfig, DEFAULT_TAPS


def test_slicer():
    assert slice_level(0.5) == 0
    assert slice_level(-0.5) == 0
    assert slice_level(0.0) == 0
    assert slice_level(0.51) == 1
    assert slice_level(-0.51) == -1
    assert slice_level(3.0) == 1


def test_pure_slicer():
    assert dfe_equalize([0.7, -0.2, -0.9, 0.5], [1.0]).tolist() == [1, 0, -1, 0]
    # h[0] scales
    assert dfe_equalize([1.4, -0.4], [2.0]).tolist() == [1, 0]


def test_cancels_isi():
    received = channel_apply([1, -1, 0], [1, 0.5])
    assert received.tolist() == pytest.approx([1, -0.5, -0.5])
    assert dfe_equalize(received, [1, 0.5]).tolist() == [1, -1, 0]


def test_noiseless_link(rng: np.random.Generator):
    """ map -> channel -> DFE gives back the transmitted levels exactly """
    levels = symbols_to_levels(rng.integers(0, 512, size=1000), 9)
    received = channel_apply(levels, DEFAULT_TAPS)
    assert dfe_equalize(received, DEFAULT_TAPS).tolist() == levels.tolist()


def test_error_propagation():
    """ One wrong decision with a strong postcursor: the following decisions go wrong, too """
    taps = [1.0, 0.9]
    received = channel_apply(np.zeros(10), taps)
    clean = dfe_equalize(received, taps)
    assert not clean.any()

    received[3] += 1.0
    decisions = dfe_equalize(received, taps)
    assert decisions[3] == 1
    assert decisions[4] == -1  # 0 - 0.9 * 1
    assert decisions[5] == 1   # 0 - 0.9 * -1
    assert (decisions[4:] != 0).all()


def test_errors_outlive_the_burst(rng: np.random.Generator):
    """ A strong burst leaves wrong decisions in the feedback filter: errors continue past the burst """
    periods, period, duration = 200, 200, 38
    cfg = ChannelConfig(snr_db=None, sbr_db=0, burst_duration=duration, burst_period=period)
    # m = 3: every symbol is one mapper symbol
    levels = symbols_to_levels(rng.integers(0, 8, size=periods * period), 3)
    received = noise_inject(channel_apply(levels, DEFAULT_TAPS), cfg, rng)
    decisions = dfe_equalize(received, DEFAULT_TAPS)

    wrong = (decisions != levels).reshape(-1, 2).any(axis=1)
    hit = burst_mask(periods * period, cfg)
    assert wrong[hit].any()

    # No AWGN: every error outside a burst is propagated from one
    after_burst = wrong.reshape(periods, period)[:, duration:]
    assert after_burst.any(axis=1).mean() > 0
