import itertools
import warnings
from fractions import Fraction

import pytest

from msirs.irs import Scheme, BurstCase, becc_bits, latency, bl_candidates


@pytest.mark.parametrize(('scheme', 'L', 't', 'BL', 'm', 'expected'), [
    (Scheme.SS_IRS, 3, 4, 1, 9, 100),
    (Scheme.MS_IRS, 3, 4, 4, 9, 145),
    (Scheme.SS_IRS, 1, 1, 1, 1, 1),
    (Scheme.SS_IRS, 3, 4, 1, 4, 45),
    (Scheme.MS_IRS, 3, 4, 3, 4, 49),
    ('ms_irs', 3, 7, 6, 9, 217),
])
def test_becc(scheme, L, t, BL, m, expected):
    assert becc_bits(scheme, L, t, BL, m) == expected


def test_becc_best_case():
    assert becc_bits(Scheme.SS_IRS, 3, 4, 1, 9, case=BurstCase.BEST) == 108
    assert becc_bits(Scheme.MS_IRS, 3, 4, 4, 9, case=BurstCase.BEST) == 180
    # Best case is never below the worst case
    for L, t, m in itertools.product(range(1, 6), range(1, 6), (3, 9)):
        for BL in range(1, t + 1):
            for scheme in Scheme:
                assert becc_bits(scheme, L, t, BL, m, case=BurstCase.BEST) >= becc_bits(scheme, L, t, BL, m)


def test_becc_bl_equals_t():
    """ With BL = t the MS-IRS formula is (L-1)*2*t*m + 1, and for deep interleaving nearly twice SS-IRS """
    for L, t, m in itertools.product(range(1, 20), range(1, 10), range(3, 13)):
        assert becc_bits(Scheme.MS_IRS, L, t, t, m) == (L - 1) * 2 * t * m + 1

    for L, t, m in itertools.product(range(10, 30), range(4, 10), (8, 9, 10)):
        ratio = becc_bits(Scheme.MS_IRS, L, t, t, m) / becc_bits(Scheme.SS_IRS, L, t, 1, m)
        assert 1.8 < ratio < 2


def test_becc_errors():
    with pytest.raises(ValueError):
        becc_bits(Scheme.MS_IRS, 3, 4, 5, 9)  # BL > t
    with pytest.raises(ValueError):
        becc_bits(Scheme.SS_IRS, 0, 4, 1, 9)
    with pytest.raises(ValueError):
        becc_bits('cross_interleaved', 3, 4, 1, 9)


def test_latency():
    res = latency(108, 96, 9, 4, 10 ** 9, 120)
    assert res.buffering_ns == 384
    assert res.receiving_ns == 3456
    assert res.decoding_budget_ns == 120
    assert res.total_ns == 3960 < 4000
    assert isinstance(res.buffering_ns, Fraction)

    # Linear in L
    assert latency(108, 96, 9, 1, 10 ** 9).buffering_ns == 96
    # Twice the rate: half the time
    fast = latency(108, 96, 9, 4, 2 * 10 ** 9, 120)
    assert fast.buffering_ns == 192
    assert fast.receiving_ns == 1728
    # Floats are taken at their decimal value
    assert latency(108, 96, 9, 4, 1e9).receiving_ns == 3456


def test_latency_errors():
    with pytest.raises(ValueError):
        latency(108, 96, 9, 4, 0)
    with pytest.raises(ValueError):
        latency(96, 108, 9, 4, 10 ** 9)
    with pytest.raises(ValueError):
        latency(108, 96, 9, 4, 10 ** 9, -1)


def test_bl_candidates():
    choices = bl_candidates(144, 129, 9, 3)  # t = 7
    assert [c.BL for c in choices] == [1, 2, 3, 4, 6]
    bl6 = choices[-1]
    assert bl6.becc_bits == 217
    assert bl6.random_reserve == 1
    assert bl6.recommended
    assert not choices[0].recommended

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        assert bl_candidates(10, 9, 4, 3) == []
        bl_candidates(144, 129, 9, 1)
    assert len(caught) == 2
