import io
from typing import Dict, Tuple

import pytest

from msirs.irs import DecoderKind
from msirs.phy import ChannelConfig
from msirs.sim import ExperimentConfig, SchemeConfig, SbrSweep, PRESETS
from msirs.sim import ResultRow, run_experiment, group_schemes, emit_results, parse_results
from msirs.sim import clopper_pearson, format_report


def small_experiment(**kwargs) -> ExperimentConfig:
    """ Small codes, few frames: an experiment that runs in a second """
    params = dict(
        schemes=[
            SchemeConfig(label='ss', n=12, k=4, m=4, L=3, BL=1),
            SchemeConfig(label='ms_single', n=12, k=4, m=4, L=3, BL=3),
            SchemeConfig(label='ms_two_pass', n=12, k=4, m=4, L=3, BL=3, decoder=DecoderKind.TWO_PASS),
        ],
        channel=ChannelConfig(snr_db=25, burst_duration=10, burst_period=40),
        sbr=SbrSweep(min_db=0, max_db=8, step_db=4),
        frames_per_point=12,
        seed=2024,
    )
    params.update(kwargs)
    return ExperimentConfig(**params)


def test_group_schemes():
    cfg = small_experiment()
    groups = group_schemes(cfg.schemes)
    assert [[s.label for s in group] for group in groups] == [['ss'], ['ms_single', 'ms_two_pass']]

    groups = group_schemes(PRESETS['case1']().schemes)
    assert [[s.label for s in group] for group in groups] == [
        ['rs432_long'],
        ['ms_irs_bl6_single', 'ms_irs_bl6_two_pass'],
    ]


def test_rows():
    cfg = small_experiment()
    rows = run_experiment(cfg)

    # Sorted by scheme, then SBR
    assert [(row.scheme, row.sbr_db) for row in rows] == [
        (label, sbr)
        for label in ('ms_single', 'ms_two_pass', 'ss')
        for sbr in (0, 4, 8)
    ]
    for row in rows:
        assert row.frames == 12
        assert row.info_bits == 12 * 3 * 4 * 4
        assert 0 <= row.block_errors <= row.frames
        assert 0 <= row.bit_errors <= row.info_bits
        assert (row.block_errors == 0) == (row.bit_errors == 0)
        assert row.ber == row.bit_errors / row.info_bits
        assert row.bler == row.block_errors / row.frames

    # Same frames, same first pass: the second pass can only repair frames
    by_key = {(row.scheme, row.sbr_db): row for row in rows}
    for sbr in (0, 4, 8):
        assert by_key['ms_two_pass', sbr].block_errors <= by_key['ms_single', sbr].block_errors


def test_noiseless():
    cfg = small_experiment(channel=ChannelConfig(snr_db=None, burst_duration=0))
    for row in run_experiment(cfg):
        assert row.bit_errors == 0
        assert row.block_errors == 0


def test_strong_signal():
    cfg = small_experiment(sbr=SbrSweep(min_db=40, max_db=40))
    for row in run_experiment(cfg):
        assert row.block_errors == 0


def test_deterministic():
    cfg = small_experiment()
    a = emit_results(run_experiment(cfg), seed=cfg.seed, taps=cfg.channel.taps)
    b = emit_results(run_experiment(cfg), seed=cfg.seed, taps=cfg.channel.taps)
    assert a == b

    # Scheme order and grouping do not change any scheme's numbers
    reordered = small_experiment(schemes=list(reversed(cfg.schemes)))
    assert run_experiment(reordered) == parse_results(a)[0]

    # Neither does the number of workers
    parallel = small_experiment(workers=2)
    assert run_experiment(parallel) == run_experiment(cfg)

    # A different seed gives different noise
    other = small_experiment(seed=2025)
    assert run_experiment(other) != run_experiment(cfg)


def test_emit_file():
    cfg = small_experiment(sbr=SbrSweep(min_db=0, max_db=0))
    rows = run_experiment(cfg)
    buf = io.StringIO()
    text = emit_results(rows, buf, seed=cfg.seed, taps=cfg.channel.taps)
    assert buf.getvalue() == text
    assert text.startswith('# seed=2024 psig=0.75 taps=1,0.45,0.25,0.12,0.05\n')
    assert parse_results(text)[0] == rows


@pytest.fixture(scope='module')
def case1_rows() -> Dict[Tuple[str, float], ResultRow]:
    rows = run_experiment(PRESETS['case1']().copy(update={'workers': 4}))
    return {(row.scheme, row.sbr_db): row for row in rows}


@pytest.mark.slow
def test_case1_two_pass_dominates(case1_rows):
    for sbr in PRESETS['case1']().sbr.points():
        assert case1_rows['ms_irs_bl6_two_pass', sbr].block_errors <= case1_rows['ms_irs_bl6_single', sbr].block_errors


@pytest.mark.slow
def test_case1_two_pass_beats_long_code(case1_rows):
    """ Single pass does about as well as the long code, two passes at least twice as well """
    gains = []
    for sbr in PRESETS['case1']().sbr.points():
        long = case1_rows['rs432_long', sbr]
        single = case1_rows['ms_irs_bl6_single', sbr]
        two_pass = case1_rows['ms_irs_bl6_two_pass', sbr]
        if long.block_errors and 2 * two_pass.block_errors <= long.block_errors and bler_overlap(single, long):
            gains.append(sbr)
    assert gains


@pytest.mark.slow
def test_ber_falls_with_sbr():
    """ One rise per curve is allowed, where the block errors are too few to tell """
    cfg = PRESETS['case1']().copy(update={'sbr': SbrSweep(min_db=0, max_db=16, step_db=8), 'workers': 4})
    rows = run_experiment(cfg)
    for scheme in cfg.schemes:
        curve = [row for row in rows if row.scheme == scheme.label]
        assert [row.sbr_db for row in curve] == [0, 8, 16]
        rises = [b for a, b in zip(curve, curve[1:]) if b.ber > a.ber]
        assert len(rises) <= 1, scheme.label
        assert all(row.block_errors < 10 for row in rises), scheme.label


@pytest.mark.slow
def test_case2_longer_segments_win():
    cfg = PRESETS['case2']()
    rows = run_experiment(cfg.copy(update={'workers': 4}))
    by_key = {(row.scheme, row.sbr_db): row for row in rows}
    points = cfg.sbr.points()

    assert sum(row.block_errors for row in rows) >= 100
    wins = [sbr for sbr in points if by_key['ms_irs_bl7', sbr].bler <= by_key['ms_irs_bl6', sbr].bler]
    assert len(wins) > len(points) / 2

    report = format_report(rows)
    assert 'ms_irs_bl7' in report and 'ms_irs_bl6' in report


def bler_overlap(a: ResultRow, b: ResultRow) -> bool:
    """ Do the 95% confidence intervals of two block error rates overlap? """
    a_lo, a_hi = clopper_pearson(a.block_errors, a.frames)
    b_lo, b_hi = clopper_pearson(b.block_errors, b.frames)
    return a_lo <= b_hi and b_lo <= a_hi
