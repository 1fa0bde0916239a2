""" Exhaustive burst sweep: the empirical burst error correction capability of a scheme

Every burst length from 1 bit up, at every bit offset inside the frame, inverts all the bits it covers.
The threshold is the longest length at which every offset still decodes to the transmitted codewords.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from msirs.rs import RsCode, encode
from msirs.util import symbols_to_bits, bits_to_symbols
from .decoders import DecoderT, prepare_decoder
from .interleaver import InterleaverConfig, interleave

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepReport:
    """ Result of a burst sweep

    Attributes:
        threshold: every burst of up to this many bits was corrected, at every offset
        max_bits: the longest burst that was tried
        first_failure: (burst length, starting bit) of the first burst that was not corrected; None if none failed
    """
    threshold: int
    max_bits: int
    first_failure: Optional[Tuple[int, int]] = None


def burst_sweep(code: RsCode, cfg: InterleaverConfig, decoder: DecoderT, max_bits: int, seed: int = 0) -> SweepReport:
    """ Sweep all-invert bursts of 1..max_bits bits over one frame, stop at the first failure

    A frame counts as recovered only if the decoded codewords equal the transmitted ones:
    a miscorrection is a failure, too.

    Args:
        code: component code
        cfg: interleaver geometry
        decoder: frame decoder: DecoderKind, its name, a FrameDecoderBase class or instance
        max_bits: longest burst to try. Bursts never extend past the frame.
        seed: seed for the random messages
    """
    frame_decoder = prepare_decoder(decoder, code, cfg)
    rng = np.random.default_rng(seed)

    truth = np.stack([
        encode(code, rng.integers(0, 1 << code.m, size=code.k))
        for _ in range(cfg.L)
    ])
    tx_bits = symbols_to_bits(interleave(cfg, truth), code.m)
    max_bits = min(max_bits, tx_bits.size)

    for length in range(1, max_bits + 1):
        for start in range(tx_bits.size - length + 1):
            bits = tx_bits.copy()
            bits[start:start + length] ^= 1
            outcome = frame_decoder(bits_to_symbols(bits, code.m))
            if not (outcome.ok and np.array_equal(outcome.codewords(), truth)):
                logger.debug('Burst of %d bits at bit %d is not corrected: codewords ok=%s',
                             length, start, [res.ok for res in outcome.final])
                logger.info('Burst sweep %r L=%d BL=%d: threshold %d bits', code, cfg.L, cfg.BL, length - 1)
                return SweepReport(length - 1, max_bits, (length, start))

    logger.info('Burst sweep %r L=%d BL=%d: no failure up to %d bits', code, cfg.L, cfg.BL, max_bits)
    return SweepReport(max_bits, max_bits)
