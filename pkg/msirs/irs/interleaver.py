""" Multiple-symbol interleaving: the DEMUX/MUX pair

L component codewords of n symbols each are dispatched round-robin, BL symbols at a time:
BL symbols of codeword 0, BL of codeword 1, ..., BL of codeword L-1, then the next BL of codeword 0, and so on.
One dispatch of BL symbols is a "segment".

BL = 1 is the classic single-symbol interleaver; L = 1 is no interleaving at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from msirs.annotations import SymbolsT


@dataclass(frozen=True)
class InterleaverConfig:
    """ Frame geometry

    Attributes:
        L: interleave depth: number of component codewords per frame
        BL: symbols per dispatch (segment length)
        n: component codeword length, a multiple of BL
    """
    L: int
    BL: int
    n: int

    def __post_init__(self):
        if self.L < 1 or self.BL < 1 or self.n < 1:
            raise ValueError(f'Interleaver needs L, BL, n >= 1: {self}')
        if self.n % self.BL:
            raise ValueError(f'Codeword length n={self.n} is not a multiple of BL={self.BL}')

    @property
    def segments_per_codeword(self) -> int:
        return self.n // self.BL

    @property
    def frame_symbols(self) -> int:
        return self.L * self.n

    @property
    def frame_segments(self) -> int:
        return self.L * self.segments_per_codeword

    def owner(self, segment: int) -> int:
        """ The codeword a segment belongs to """
        return segment % self.L


class StreamPosition(NamedTuple):
    """ Where a frame-relative stream position lands """
    position: int
    segment: int
    codeword: int
    symbol: int


def interleave(cfg: InterleaverConfig, codewords: Sequence[SymbolsT]) -> np.ndarray:
    """ Merge L codewords into one stream of L*n symbols

    Raises:
        ValueError: wrong number of codewords or wrong codeword length
    """
    words = np.asarray(codewords, dtype=np.int64)
    if words.shape != (cfg.L, cfg.n):
        raise ValueError(f'Expected {cfg.L} codewords of {cfg.n} symbols, got shape {words.shape}')
    return words.reshape(cfg.L, cfg.segments_per_codeword, cfg.BL).transpose(1, 0, 2).reshape(-1)


def deinterleave(cfg: InterleaverConfig, stream: SymbolsT) -> np.ndarray:
    """ Split a stream of L*n symbols back into an (L, n) array of codewords """
    stream = np.asarray(stream, dtype=np.int64)
    if stream.shape != (cfg.frame_symbols,):
        raise ValueError(f'Expected a stream of {cfg.frame_symbols} symbols, got shape {stream.shape}')
    return stream.reshape(cfg.segments_per_codeword, cfg.L, cfg.BL).transpose(1, 0, 2).reshape(cfg.L, cfg.n)


def position_map(cfg: InterleaverConfig, codeword: int, symbol: int) -> int:
    """ Stream position of symbol `symbol` of codeword `codeword` """
    if not 0 <= codeword < cfg.L or not 0 <= symbol < cfg.n:
        raise ValueError(f'(codeword={codeword}, symbol={symbol}) is outside L={cfg.L}, n={cfg.n}')
    return segment_of(cfg, codeword, symbol) * cfg.BL + symbol % cfg.BL


def segment_of(cfg: InterleaverConfig, codeword: int, symbol: int) -> int:
    """ Frame segment index holding symbol `symbol` of codeword `codeword` """
    return (symbol // cfg.BL) * cfg.L + codeword


def stream_position(cfg: InterleaverConfig, position: int) -> StreamPosition:
    """ Inverse of position_map(): which codeword symbol sits at a stream position """
    if not 0 <= position < cfg.frame_symbols:
        raise ValueError(f'Stream position {position} is outside the frame of {cfg.frame_symbols} symbols')
    segment = position // cfg.BL
    return StreamPosition(
        position=position,
        segment=segment,
        codeword=segment % cfg.L,
        symbol=(segment // cfg.L) * cfg.BL + position % cfg.BL,
    )


def segment_symbols(cfg: InterleaverConfig, segment: int) -> range:
    """ Symbol indices, within its owner codeword, that a segment carries """
    start = (segment // cfg.L) * cfg.BL
    return range(start, start + cfg.BL)
