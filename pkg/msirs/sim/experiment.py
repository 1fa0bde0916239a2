""" Monte-Carlo simulation of the whole link

Per frame: random messages -> RS encoding -> interleaving -> PAM3 mapping -> channel -> noise -> DFE
-> demapping -> deinterleaving -> decoding, then the decoded messages are compared with the transmitted ones.

Frames are laid back to back on one transmission timeline: the periodic burst hits a frame where it would
hit it in a continuous transmission. Data and noise of frame `i` at SBR point `j` come from their own
random streams, so schemes with the same frame size see the same noise.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Tuple, Dict, Sequence

import numpy as np

from msirs.irs import interleave, prepare_decoder
from msirs.phy import ChannelConfig, symbols_to_levels, levels_to_symbols, mapper_symbols
from msirs.phy import channel_apply, noise_inject, dfe_equalize
from msirs.rs import encode
from msirs.util import symbols_to_bits
from .config import ExperimentConfig, SchemeConfig
from .rng import frame_rng, STREAM_DATA, STREAM_NOISE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResultRow:
    """ Error counts of one scheme at one SBR point. A block is one frame """
    scheme: str
    sbr_db: float
    frames: int
    info_bits: int
    bit_errors: int
    block_errors: int

    @property
    def ber(self) -> float:
        return self.bit_errors / self.info_bits

    @property
    def bler(self) -> float:
        return self.block_errors / self.frames


@dataclass
class Counters:
    """ Error counters of one scheme, summed over frames """
    bit_errors: int = 0
    block_errors: int = 0
    # Symbols wrong before decoding
    channel_symbol_errors: int = 0

    def __iadd__(self, other: Counters) -> Counters:
        self.bit_errors += other.bit_errors
        self.block_errors += other.block_errors
        self.channel_symbol_errors += other.channel_symbol_errors
        return self


def run_experiment(cfg: ExperimentConfig) -> List[ResultRow]:
    """ Run the experiment: every scheme at every SBR point

    Rows are sorted by (scheme label, SBR).
    The results depend only on the configuration: not on the number of workers, nor on the order of schemes.
    """
    groups = group_schemes(cfg.schemes)
    points = cfg.sbr.points()
    counts: Dict[Tuple[str, int], Counters] = {}

    executor = ProcessPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    try:
        for sbr_index, sbr_db in enumerate(points):
            channel = cfg.channel.copy(update={'sbr_db': sbr_db})
            for schemes in groups:
                for label, counters in _run_point(executor, cfg, schemes, channel, sbr_index).items():
                    counts[label, sbr_index] = counters
                    logger.debug('%s @ %g dB: %d channel symbol errors',
                                 label, sbr_db, counters.channel_symbol_errors)

            logger.info('SBR %g dB: %s', sbr_db, ', '.join(
                f'{scheme.label} {counts[scheme.label, sbr_index].block_errors}/{cfg.frames_per_point} blocks'
                for scheme in cfg.schemes
            ))
    finally:
        if executor is not None:
            executor.shutdown()

    return sorted((
        ResultRow(
            scheme=scheme.label,
            sbr_db=sbr_db,
            frames=cfg.frames_per_point,
            info_bits=cfg.frames_per_point * scheme.info_bits,
            bit_errors=counts[scheme.label, sbr_index].bit_errors,
            block_errors=counts[scheme.label, sbr_index].block_errors,
        )
        for scheme in cfg.schemes
        for sbr_index, sbr_db in enumerate(points)
    ), key=lambda row: (row.scheme, row.sbr_db))


def group_schemes(schemes: Sequence[SchemeConfig]) -> List[List[SchemeConfig]]:
    """ Group schemes that transmit identical frames: they are simulated once and decoded by each """
    groups: Dict[tuple, List[SchemeConfig]] = defaultdict(list)
    for scheme in schemes:
        groups[scheme.transmit_signature].append(scheme)
    return list(groups.values())


def simulate_frames(schemes: Sequence[SchemeConfig], channel: ChannelConfig,
                    sbr_index: int, frames: range) -> Dict[str, Counters]:
    """ Simulate a range of frames of schemes that share a transmit chain """
    tx_scheme = schemes[0]
    code, icfg = tx_scheme.code, tx_scheme.interleaver
    decoders = {scheme.label: prepare_decoder(scheme.decoder, code, icfg) for scheme in schemes}
    groups_per_frame = mapper_symbols(icfg.frame_symbols, code.m)

    counts = {scheme.label: Counters() for scheme in schemes}
    for frame_index in frames:
        data_rng = frame_rng(channel.seed, sbr_index, frame_index, STREAM_DATA)
        messages = data_rng.integers(0, 1 << code.m, size=(icfg.L, code.k))
        tx = interleave(icfg, [encode(code, message) for message in messages])

        samples = channel_apply(symbols_to_levels(tx, code.m), channel.taps)
        samples = noise_inject(samples, channel, frame_rng(channel.seed, sbr_index, frame_index, STREAM_NOISE),
                               symbol_offset=frame_index * groups_per_frame)
        rx = levels_to_symbols(dfe_equalize(samples, channel.taps), code.m, icfg.frame_symbols)
        symbol_errors = int(np.count_nonzero(rx != tx))

        for label, decoder in decoders.items():
            decoded = decoder(rx).codewords()[:, :code.k]
            bit_errors = int(symbols_to_bits((decoded ^ messages).ravel(), code.m).sum())
            counts[label] += Counters(bit_errors, int(bit_errors > 0), symbol_errors)
    return counts


def _run_point(executor, cfg: ExperimentConfig, schemes: List[SchemeConfig],
               channel: ChannelConfig, sbr_index: int) -> Dict[str, Counters]:
    frames = range(cfg.frames_per_point)
    if executor is None:
        return simulate_frames(schemes, channel, sbr_index, frames)

    # Integer counters: the sum does not depend on the split
    chunk = -(-len(frames) // (cfg.workers * 4))
    futures = [
        executor.submit(simulate_frames, schemes, channel, sbr_index, frames[i:i + chunk])
        for i in range(0, len(frames), chunk)
    ]
    counts = {scheme.label: Counters() for scheme in schemes}
    for future in futures:
        for label, counters in future.result().items():
            counts[label] += counters
    return counts
