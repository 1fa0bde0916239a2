""" Closed-form calculators: burst error correction capability (BECC) and FEC latency

Examples:
    becc_bits(Scheme.SS_IRS, L=3, t=4, BL=1, m=9)  # -> 100
    becc_bits(Scheme.MS_IRS, L=3, t=4, BL=4, m=9)  # -> 145
    latency(108, 96, 9, 4, 10**9, 120).total_ns    # -> 3960
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, NamedTuple, Union

from msirs.util import IMPOSSIBLE
from .defs import Scheme, BurstCase

# A rate or a duration: exact when given as int/Fraction
Number = Union[int, float, Fraction]


def becc_bits(scheme: Union[Scheme, str], L: int, t: int, BL: int, m: int, *, case: BurstCase = BurstCase.WORST) -> int:
    """ Burst error correction capability, in bits

    The worst case is a burst that starts on the last bit of a symbol (SS-IRS) or of a segment (MS-IRS):
    the partially hit symbol on each end costs a whole symbol of correction.

    * SS-IRS, worst: (L*t - 1)*m + 1
    * SS-IRS, best:  L*t*m
    * MS-IRS, worst: (L-1)*2*BL*m + 1. With BL = t, that's (L-1)*2*t*m + 1
    * MS-IRS, best:  (2L-1)*BL*m

    MS-IRS figures assume two-pass decoding: the burst may cover up to two segments of every codeword
    as long as at least one codeword sees at most t symbol errors and locates the burst for the others.

    Raises:
        ValueError: parameters out of range; BL > t for MS-IRS (the formula does not hold there)
    """
    scheme = Scheme(scheme)
    if L < 1 or t < 1 or BL < 1 or m < 1:
        raise ValueError(f'BECC needs L, t, BL, m >= 1: L={L} t={t} BL={BL} m={m}')

    if scheme == Scheme.SS_IRS:
        if case == BurstCase.WORST:
            return (L * t - 1) * m + 1
        else:
            return L * t * m
    elif scheme == Scheme.MS_IRS:
        if BL > t:
            raise ValueError(f'BL={BL} exceeds t={t}: outside the MS-IRS BECC formula')
        if case == BurstCase.WORST:
            return (L - 1) * 2 * BL * m + 1
        else:
            return (2 * L - 1) * BL * m
    else:
        raise IMPOSSIBLE(scheme)


@dataclass(frozen=True)
class LatencyBreakdown:
    """ FEC latency, in nanoseconds

    Attributes:
        buffering_ns: parity insertion: L*(n-k)*(k/n)*m bit times
        receiving_ns: the whole frame of information bits must arrive: L*k*m bit times
        decoding_budget_ns: decoder latency, as given by the caller
    """
    buffering_ns: Fraction
    receiving_ns: Fraction
    decoding_budget_ns: Fraction

    @property
    def total_ns(self) -> Fraction:
        return self.buffering_ns + self.receiving_ns + self.decoding_budget_ns


def latency(n: int, k: int, m: int, L: int, data_rate_bps: Number, decoding_budget_ns: Number = 0) -> LatencyBreakdown:
    """ FEC latency of an L-deep interleaved RS(n, k) scheme at a given data rate

    Integer and Fraction inputs give exact results.

    Raises:
        ValueError: non-positive parameters, k >= n
    """
    if min(n, k, m, L) < 1 or k >= n:
        raise ValueError(f'Latency needs 0 < k < n and m, L >= 1: n={n} k={k} m={m} L={L}')
    if data_rate_bps <= 0:
        raise ValueError(f'Data rate must be positive: {data_rate_bps}')
    if decoding_budget_ns < 0:
        raise ValueError(f'Decoding budget must be non-negative: {decoding_budget_ns}')

    bit_ns = Fraction(10 ** 9) / _exact(data_rate_bps)
    return LatencyBreakdown(
        buffering_ns=L * (n - k) * Fraction(k, n) * m * bit_ns,
        receiving_ns=L * k * m * bit_ns,
        decoding_budget_ns=_exact(decoding_budget_ns),
    )


class BlChoice(NamedTuple):
    """ One candidate segment length for an MS-IRS scheme """
    BL: int
    # Worst-case BECC, bits
    becc_bits: int
    # Random symbol errors per codeword that can still be corrected on top of a two-segment burst hit
    random_reserve: int
    # Within the "2BL >> t > BL" guidance
    recommended: bool


def bl_candidates(n: int, k: int, m: int, L: int) -> List[BlChoice]:
    """ Segment lengths usable with RS(n, k) interleaved L deep

    Every BL that divides n and stays within t, with its worst-case BECC.
    Larger BL buys burst capability; t - BL is what's left for random errors.
    """
    t = (n - k) // 2
    if t < 1:
        warnings.warn(f'RS({n},{k}) corrects no errors: no BL is within the BECC formula')
        return []
    if L == 1:
        warnings.warn('L=1: MS-IRS burst capability is a single bit for any BL')

    return [
        BlChoice(
            BL=BL,
            becc_bits=becc_bits(Scheme.MS_IRS, L, t, BL, m),
            random_reserve=t - BL,
            recommended=2 * BL > t > BL,
        )
        for BL in range(1, t + 1)
        if n % BL == 0
    ]


def _exact(value: Number) -> Fraction:
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    return Fraction(str(value))
