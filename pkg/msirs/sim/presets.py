""" Preset experiments

* case1: a long RS(432,387) code against MS-IRS RS(144,129) L=3 BL=6, decoded single-pass and two-pass.
  Equal information bits and equal frame size: the schemes see the same noise.
* case2: a longer burst (114 mapper symbols): MS-IRS with BL=7 on RS(147,132) against BL=6 on RS(144,129)

Both run over PRESET_TAPS, not the ChannelConfig default.
"""
from __future__ import annotations

from typing import Callable, Dict

from msirs.irs import DecoderKind
from msirs.phy import ChannelConfig
from .config import ExperimentConfig, SchemeConfig, SbrSweep

# A channel with a long flat postcursor tail.
# Wrong DFE decisions keep feeding back, and the errors run on past the end of the burst noise.
# With the default taps they die out within a sample or two, and a 38-symbol burst never beats any of the codes.
PRESET_TAPS = (1.0, 0.6, 0.6, 0.6, 0.6)


def case1() -> ExperimentConfig:
    return ExperimentConfig(
        schemes=[
            SchemeConfig(label='rs432_long', n=432, k=387, m=9, L=1, BL=1, decoder=DecoderKind.SINGLE_PASS),
            SchemeConfig(label='ms_irs_bl6_single', n=144, k=129, m=9, L=3, BL=6, decoder=DecoderKind.SINGLE_PASS),
            SchemeConfig(label='ms_irs_bl6_two_pass', n=144, k=129, m=9, L=3, BL=6, decoder=DecoderKind.TWO_PASS),
        ],
        channel=ChannelConfig(taps=list(PRESET_TAPS), snr_db=30.0, burst_duration=38, burst_period=5400),
        sbr=SbrSweep(min_db=0, max_db=16, step_db=1),
        frames_per_point=200,
    )


def case2() -> ExperimentConfig:
    return ExperimentConfig(
        schemes=[
            SchemeConfig(label='ms_irs_bl7', n=147, k=132, m=9, L=3, BL=7, decoder=DecoderKind.TWO_PASS),
            SchemeConfig(label='ms_irs_bl6', n=144, k=129, m=9, L=3, BL=6, decoder=DecoderKind.TWO_PASS),
        ],
        channel=ChannelConfig(taps=list(PRESET_TAPS), snr_db=30.0, burst_duration=114, burst_period=5400),
        sbr=SbrSweep(min_db=0, max_db=16, step_db=1),
        frames_per_point=200,
    )


PRESETS: Dict[str, Callable[[], ExperimentConfig]] = {
    'case1': case1,
    'case2': case2,
}
