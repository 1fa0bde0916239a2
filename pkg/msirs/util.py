import numpy as np

from .annotations import SymbolsT


def as_symbols(word: SymbolsT, m: int) -> np.ndarray:
    """ Convert a word into a 1-D int64 array of m-bit symbols; complain about anything else """
    arr = np.asarray(word, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f'Expected a 1-D word of symbols, got shape {arr.shape}')
    if arr.size and (arr.min() < 0 or arr.max() >= (1 << m)):
        raise ValueError(f'Symbols must be in [0, {1 << m}): {arr.min()}..{arr.max()}')
    return arr


def symbols_to_bits(symbols: SymbolsT, m: int) -> np.ndarray:
    """ Unpack m-bit symbols into bits, most significant bit first """
    symbols = np.asarray(symbols, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    return ((symbols[:, None] >> shifts) & 1).astype(np.uint8).ravel()


def bits_to_symbols(bits: np.ndarray, m: int) -> np.ndarray:
    """ Pack bits (most significant first) into m-bit symbols. len(bits) must be a multiple of m """
    bits = np.asarray(bits, dtype=np.int64)
    if bits.size % m:
        raise ValueError(f'{bits.size} bits do not make whole {m}-bit symbols')
    weights = np.int64(1) << np.arange(m - 1, -1, -1, dtype=np.int64)
    return bits.reshape(-1, m) @ weights


# Raised on branches that valid input never reaches
IMPOSSIBLE = AssertionError
