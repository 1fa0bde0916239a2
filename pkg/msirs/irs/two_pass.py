""" Two-pass decoding of a multiple-symbol interleaved frame

First pass: errors-only decoding of every component codeword.
If some codewords fail while others succeed, the corrections made by the successful ones tell where the burst was.
Second pass: each failed codeword gets its segments inside that burst window erased,
and is decoded again with the combined errors-and-erasures decoder.

Codewords that succeeded in the first pass are never touched again.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Tuple, Mapping, List

import numpy as np

from msirs.annotations import SymbolsT
from msirs.rs import RsCode, DecodeResult, decode
from .interleaver import InterleaverConfig, deinterleave, segment_of, segment_symbols

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BurstWindow:
    """ Inferred burst location, in frame segments

    Attributes:
        lo, hi: segment range, both ends included
        weights: corrected symbols per segment
    """
    lo: int
    hi: int
    weights: Mapping[int, int]

    @property
    def segments(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def anchor(self) -> float:
        """ Where the burst surely was: the mean index of the segments carrying the most corrections """
        top = max(self.weights.values())
        heaviest = [s for s, w in self.weights.items() if w == top]
        return sum(heaviest) / len(heaviest)


@dataclass(frozen=True, eq=False)
class FrameOutcome:
    """ Result of decoding one frame """
    # Deinterleaved received codewords, (L, n)
    received: np.ndarray

    # Per-codeword results: first pass, and final
    first_pass: Tuple[DecodeResult, ...]
    final: Tuple[DecodeResult, ...]

    # 1 or 2, per codeword
    pass_used: Tuple[int, ...]

    # Burst window used for the second pass, if any
    inferred_window: Optional[BurstWindow] = None

    # Segments erased per codeword in the second pass
    erased_segments: Tuple[Tuple[int, ...], ...] = ()

    @property
    def ok(self) -> bool:
        """ Frame status: every codeword decoded """
        return all(res.ok for res in self.final)

    def codewords(self) -> np.ndarray:
        """ The decoder's best guess: corrected codewords; received symbols where decoding failed """
        out = self.received.copy()
        for c, res in enumerate(self.final):
            if res.ok:
                out[c] = res.codeword
        return out


def first_pass(code: RsCode, cfg: InterleaverConfig, frame: SymbolsT) -> Tuple[DecodeResult, ...]:
    """ Deinterleave and decode every codeword, errors only """
    _check_geometry(code, cfg)
    return tuple(decode(code, word) for word in deinterleave(cfg, frame))


def single_pass_frame(code: RsCode, cfg: InterleaverConfig, frame: SymbolsT) -> FrameOutcome:
    """ The conventional decoder: first pass only """
    received = deinterleave(cfg, frame)
    results = first_pass(code, cfg, frame)
    return FrameOutcome(received, results, results, (1,) * cfg.L)


def infer_burst_window(results: Tuple[DecodeResult, ...], cfg: InterleaverConfig) -> Optional[BurstWindow]:
    """ Locate the burst from the corrections of successfully decoded codewords

    Every corrected symbol is mapped to its frame segment.
    The window spans all of those segments, and then grows outwards over segments owned by failed codewords.
    It stops at a segment owned by a successful codeword (which had no corrections there), or at the frame edge.

    Returns:
        The window, or `None` if nothing failed, nothing succeeded,
        or no successful codeword corrected anything (the window is unknowable this way)
    """
    failed = {c for c, res in enumerate(results) if not res.ok}
    if not failed or len(failed) == len(results):
        return None

    hits = Counter()
    for c, res in enumerate(results):
        if res.ok:
            for symbol in res.error_positions:
                hits[segment_of(cfg, c, symbol)] += 1
    if not hits:
        return None

    lo, hi = min(hits), max(hits)
    while lo > 0 and cfg.owner(lo - 1) in failed:
        lo -= 1
    while hi + 1 < cfg.frame_segments and cfg.owner(hi + 1) in failed:
        hi += 1
    return BurstWindow(lo, hi, dict(sorted(hits.items())))


def decode_frame(code: RsCode, cfg: InterleaverConfig, frame: SymbolsT) -> FrameOutcome:
    """ Two-pass decoding of one frame

    1. First pass. If everything decoded: done.
    2. Infer the burst window. If it can't be inferred: the frame fails with the first-pass results.
    3. Every failed codeword: erase its segments inside the window and decode again.
       If that is more than r erasures, the end farther from the window anchor (the segments with the most
       corrections) is dropped, one segment at a time (ties: the higher index), until it fits.
       A stray random correction far from the burst widens the window; trimming towards the anchor undoes that.
    """
    _check_geometry(code, cfg)
    received = deinterleave(cfg, frame)
    results = tuple(decode(code, word) for word in received)
    if all(res.ok for res in results):
        return FrameOutcome(received, results, results, (1,) * cfg.L)

    window = infer_burst_window(results, cfg)
    if window is None:
        logger.debug('Burst window unknown: %d of %d codewords failed', sum(not r.ok for r in results), cfg.L)
        return FrameOutcome(received, results, results, (1,) * cfg.L)

    final: List[DecodeResult] = list(results)
    pass_used = [1] * cfg.L
    erased_segments: List[Tuple[int, ...]] = [()] * cfg.L
    for c, res in enumerate(results):
        if res.ok:
            continue
        segments = erasure_segments(cfg, c, window, code.r)
        if not segments:
            continue
        erasures = [symbol for seg in segments for symbol in segment_symbols(cfg, seg)]
        final[c] = decode(code, received[c], erasures)
        pass_used[c] = 2
        erased_segments[c] = segments

    logger.debug('Burst window %d..%d: erased %s; pass 2 decoded %s',
                 window.lo, window.hi, erased_segments,
                 [c for c in range(cfg.L) if pass_used[c] == 2 and final[c].ok])
    return FrameOutcome(received, results, tuple(final), tuple(pass_used), window, tuple(erased_segments))


def erasure_segments(cfg: InterleaverConfig, codeword: int, window: BurstWindow, r: int) -> Tuple[int, ...]:
    """ Segments of `codeword` inside the window, trimmed to at most r erased symbols """
    segments = [s for s in window.segments if cfg.owner(s) == codeword]
    anchor = window.anchor
    while segments and len(segments) * cfg.BL > r:
        if segments[-1] - anchor >= anchor - segments[0]:
            segments.pop()
        else:
            segments.pop(0)
    return tuple(segments)


def _check_geometry(code: RsCode, cfg: InterleaverConfig):
    if code.n != cfg.n:
        raise ValueError(f'{code!r} does not fit an interleaver for n={cfg.n}')
