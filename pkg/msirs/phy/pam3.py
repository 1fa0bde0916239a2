""" PAM3 mapper: 3 bits onto a pair of three-level samples

Every 3-bit group becomes two line samples {even, odd}, each in {-1, 0, +1}.
Eight of the nine pairs are used; {0, 0} is never transmitted.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from msirs.annotations import SymbolsT
from msirs.util import symbols_to_bits, bits_to_symbols


class Pam3Pair(NamedTuple):
    """ Two consecutive line samples carrying one 3-bit group """
    even: int
    odd: int


# 3-bit group -> {even, odd}
MAPPING_TABLE = (
    Pam3Pair(-1, -1),  # 000
    Pam3Pair(-1, 0),   # 001
    Pam3Pair(-1, +1),  # 010
    Pam3Pair(0, -1),   # 011
    Pam3Pair(0, +1),   # 100
    Pam3Pair(+1, -1),  # 101
    Pam3Pair(+1, 0),   # 110
    Pam3Pair(+1, +1),  # 111
)

# Bits per mapper symbol; line samples per mapper symbol
GROUP_BITS = 3
SAMPLES_PER_GROUP = 2

# Vectorized tables
_MAP_LEVELS = np.array(MAPPING_TABLE, dtype=np.int8)  # (8, 2)
_DEMAP = np.zeros(9, dtype=np.int64)  # index: (even+1)*3 + (odd+1); {0,0} demaps to 000
for _group, (_even, _odd) in enumerate(MAPPING_TABLE):
    _DEMAP[(_even + 1) * 3 + (_odd + 1)] = _group
_GROUP_WEIGHTS = np.array([4, 2, 1], dtype=np.int64)


def pam3_map(group: int) -> Pam3Pair:
    """ Map a 3-bit group onto a sample pair """
    if not 0 <= group < 8:
        raise ValueError(f'Not a 3-bit group: {group}')
    return MAPPING_TABLE[group]


def pam3_demap(pair: Pam3Pair) -> int:
    """ Sliced sample pair -> 3-bit group. {0, 0} gives 000 """
    even, odd = pair
    if even not in (-1, 0, 1) or odd not in (-1, 0, 1):
        raise ValueError(f'Not a sliced PAM3 pair: {pair}')
    return int(_DEMAP[(even + 1) * 3 + (odd + 1)])


def symbols_to_levels(symbols: SymbolsT, m: int) -> np.ndarray:
    """ m-bit symbols -> line samples

    The bitstream (most significant bit of each symbol first) is zero-padded to whole 3-bit groups;
    every group gives an {even, odd} pair.
    """
    bits = symbols_to_bits(symbols, m)
    pad = -bits.size % GROUP_BITS
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=bits.dtype)])
    groups = bits.reshape(-1, GROUP_BITS) @ _GROUP_WEIGHTS
    return _MAP_LEVELS[groups].ravel()


def levels_to_symbols(levels: np.ndarray, m: int, n_symbols: int) -> np.ndarray:
    """ Sliced line samples -> m-bit symbols; padding bits are dropped """
    levels = np.asarray(levels, dtype=np.int64)
    if levels.size % SAMPLES_PER_GROUP:
        raise ValueError(f'{levels.size} samples do not make whole pairs')
    pairs = levels.reshape(-1, SAMPLES_PER_GROUP)
    groups = _DEMAP[(pairs[:, 0] + 1) * 3 + (pairs[:, 1] + 1)]
    bits = ((groups[:, None] >> np.array([2, 1, 0])) & 1).ravel()
    if bits.size < n_symbols * m:
        raise ValueError(f'{levels.size} samples carry fewer than {n_symbols} symbols of {m} bits')
    return bits_to_symbols(bits[:n_symbols * m], m)


def mapper_symbols(n_symbols: int, m: int) -> int:
    """ Number of 3-bit groups that carry n_symbols m-bit symbols """
    return -(-n_symbols * m // GROUP_BITS)
