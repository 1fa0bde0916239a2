""" Test helpers: oracles and fixtures that don't go through the code under test """
import itertools
from typing import Optional, Sequence, Tuple, Set

import numpy as np

from msirs.irs import InterleaverConfig, interleave, position_map
from msirs.rs import RsCode, encode


def random_codeword(code: RsCode, rng: np.random.Generator) -> np.ndarray:
    return encode(code, rng.integers(0, 1 << code.m, size=code.k))


def corrupt(code: RsCode, codeword: np.ndarray, rng: np.random.Generator,
            n_errors: int, n_erasures: int) -> Tuple[np.ndarray, Set[int], Set[int]]:
    """ Put errors and erasures into a codeword

    Errors get a nonzero error value; erased symbols get any value, possibly the right one.

    Returns:
        (received word, error positions, erasure positions)
    """
    positions = rng.permutation(code.n)
    errors = {int(i) for i in positions[:n_errors]}
    erasures = {int(i) for i in positions[n_errors:n_errors + n_erasures]}

    received = codeword.copy()
    for i in errors:
        received[i] ^= rng.integers(1, 1 << code.m)
    for i in erasures:
        received[i] = rng.integers(0, 1 << code.m)
    return received, errors, erasures


def all_codewords(code: RsCode) -> np.ndarray:
    """ The whole codebook: q^k codewords. Small codes only """
    messages = itertools.product(range(1 << code.m), repeat=code.k)
    return np.stack([encode(code, message) for message in messages])


def nearest_codeword(codebook: np.ndarray, code: RsCode, received: np.ndarray,
                     erasures: Sequence[int] = ()) -> Optional[np.ndarray]:
    """ Minimum-distance oracle: the codeword within decoding radius of `received`, if any

    Distance is counted outside the erasures; the radius is (r - f) // 2.
    """
    keep = np.ones(code.n, dtype=bool)
    keep[list(erasures)] = False
    distances = np.count_nonzero(codebook[:, keep] != received[keep], axis=1)
    best = int(np.argmin(distances))
    if distances[best] <= (code.r - len(erasures)) // 2:
        return codebook[best]
    return None


def burst_frame(code: RsCode, cfg: InterleaverConfig, truth: np.ndarray,
                burst: range, burst_value: int, random_errors: Sequence[Tuple[int, int]], random_value: int) -> np.ndarray:
    """ Interleave `truth` and corrupt it

    Args:
        burst: stream positions hit by the burst
        burst_value: XOR-ed into every burst symbol
        random_errors: (codeword, symbol) pairs with a random error
        random_value: XOR-ed into every random error
    """
    frame = interleave(cfg, truth)
    for p in burst:
        frame[p] ^= burst_value
    for c, sym in random_errors:
        frame[position_map(cfg, c, sym)] ^= random_value
    return frame


# The worst case of a BL=3 MS-IRS frame, L=3, t=4:
# the burst starts at the last symbol of the first codeword-0 segment
# and ends with the second codeword-1 segment: stream positions 2..14.
# One random error outside the burst in every codeword.
WORST_CASE_CFG = InterleaverConfig(L=3, BL=3, n=12)
WORST_CASE_BURST = range(2, 15)
WORST_CASE_RANDOM_ERRORS = ((0, 10), (1, 7), (2, 10))


def worst_case_frame(code: RsCode, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """ The worst-case frame: (corrupted frame, transmitted codewords) """
    truth = np.stack([random_codeword(code, rng) for _ in range(WORST_CASE_CFG.L)])
    frame = burst_frame(code, WORST_CASE_CFG, truth, WORST_CASE_BURST, 0xF, WORST_CASE_RANDOM_ERRORS, 0x5)
    return frame, truth
