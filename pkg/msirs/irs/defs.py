from __future__ import annotations

import enum


@enum.unique
class DecoderKind(str, enum.Enum):
    """ Frame decoder: how an interleaved frame is decoded """
    # Errors-only decoding of every codeword. The conventional IRS decoder.
    SINGLE_PASS = 'single_pass'

    # Errors-only first, then errors-and-erasures for the failures, guided by the first pass
    TWO_PASS = 'two_pass'


@enum.unique
class Scheme(str, enum.Enum):
    """ Interleaving scheme, as far as the burst-correction formulas are concerned """
    # Single-symbol interleaving (BL = 1), single-pass decoding
    SS_IRS = 'ss_irs'

    # Multiple-symbol interleaving (BL > 1), two-pass decoding
    MS_IRS = 'ms_irs'


@enum.unique
class BurstCase(enum.Enum):
    """ Burst alignment for the BECC formulas """
    # Burst starts on the last bit of a symbol (or segment): the guarantee
    WORST = enum.auto()

    # Burst starts on the first bit of a symbol (or segment)
    BEST = enum.auto()
