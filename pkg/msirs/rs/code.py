""" Systematic shortened Reed-Solomon codes: construction and encoding

Codeword layout: the k message symbols first, then r = n - k parity symbols.
Symbol i of a codeword is the coefficient of x^(n-1-i), so it sits at locator alpha^(n-1-i).
A code shorter than 2^m - 1 is a shortened code: the missing leading symbols are implicit zeros.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Optional

import numpy as np

from msirs.annotations import Poly, SymbolsT
from msirs.gf import Field, field_new
from msirs.util import as_symbols
from .poly import poly_mul


@dataclass(frozen=True, eq=False)
class RsCode:
    """ RS(n, k) over GF(2^m). Immutable.

    Use rs_code() to get one: it validates and caches.
    """
    # Arithmetic context
    field: Field

    # Codeword length, message length
    n: int
    k: int

    # First consecutive root of the generator: alpha^b .. alpha^(b+r-1)
    b: int = 0

    # Generator polynomial, constant term first, monic, degree r
    generator: Tuple[int, ...] = dataclasses.field(init=False)

    # Parity table, log domain: row i holds x^(n-1-i) mod g(x) as r symbols (most significant first).
    # -1 marks a zero coefficient.
    parity_log: np.ndarray = dataclasses.field(init=False, repr=False)

    # Syndrome table, log domain: [i, j] = log of alpha^((b+j)(n-1-i))
    syndrome_log: np.ndarray = dataclasses.field(init=False, repr=False)

    def __post_init__(self):
        f = self.field
        if not 0 < self.k < self.n <= f.order:
            raise ValueError(f'RS({self.n},{self.k}) needs 0 < k < n <= {f.order} over GF(2^{f.m})')
        r = self.n - self.k
        g = generator_poly(f, r, self.b)
        object.__setattr__(self, 'generator', tuple(g))
        object.__setattr__(self, 'parity_log', _parity_table(f, g, self.n, self.k))
        powers = np.arange(self.n - 1, -1, -1, dtype=np.int64)
        roots = self.b + np.arange(r, dtype=np.int64)
        syndrome_log = (powers[:, None] * roots[None, :]) % f.order
        syndrome_log.flags.writeable = False
        object.__setattr__(self, 'syndrome_log', syndrome_log)

    def __repr__(self):
        return f'RS({self.n},{self.k},m={self.field.m})'

    def __reduce__(self):
        return rs_code, (self.n, self.k, self.field.m, self.field.primitive_poly, self.b)

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def r(self) -> int:
        """ Redundancy: parity symbols per codeword """
        return self.n - self.k

    @property
    def t(self) -> int:
        """ Errors-only correction capability """
        return self.r // 2

    @property
    def d(self) -> int:
        """ Minimum distance (MDS) """
        return self.r + 1

    def message_of(self, codeword: SymbolsT) -> np.ndarray:
        """ The systematic part of a codeword """
        return np.asarray(codeword)[:self.k]


@lru_cache()
def rs_code(n: int, k: int, m: int, primitive_poly: Optional[int] = None, b: int = 0) -> RsCode:
    """ Get an RS(n, k) code over GF(2^m)

    Args:
        n: codeword length, at most 2^m - 1
        k: message length
        m: bits per symbol
        primitive_poly: field polynomial; `None` for the default one
        b: power of the first generator root
    """
    return RsCode(field_new(m, primitive_poly), n, k, b)


def generator_poly(f: Field, r: int, b: int = 0) -> Poly:
    """ Monic degree-r polynomial with roots alpha^b .. alpha^(b+r-1), constant term first """
    if not 1 <= r < f.order:
        raise ValueError(f'Redundancy r={r} is not within [1, {f.order})')
    g = [1]
    for i in range(r):
        g = poly_mul(f, g, [f.alpha_pow(b + i), 1])
    return g


def encode(code: RsCode, message: SymbolsT) -> np.ndarray:
    """ Systematic encoding: message followed by the remainder of message(x) * x^r divided by g(x)

    Raises:
        ValueError: wrong message length, out-of-range symbols
    """
    msg = as_symbols(message, code.m)
    if msg.size != code.k:
        raise ValueError(f'{code!r} encodes {code.k} symbols, got {msg.size}')
    parity = xor_products(code.field, msg, code.parity_log)
    return np.concatenate([msg, parity])


def syndromes(code: RsCode, word: SymbolsT) -> np.ndarray:
    """ The r syndromes S_j = word(alpha^(b+j)). All zero iff `word` is a codeword """
    word = np.asarray(word, dtype=np.int64)
    if word.size != code.n:
        raise ValueError(f'{code!r} words have {code.n} symbols, got {word.size}')
    return xor_products(code.field, word, code.syndrome_log)


def xor_products(f: Field, coeffs: np.ndarray, table_log: np.ndarray) -> np.ndarray:
    """ Sum (XOR) over i of coeffs[i] * table[i, :], with `table` given in the log domain (-1 = zero) """
    nz = np.flatnonzero(coeffs)
    if nz.size == 0:
        return np.zeros(table_log.shape[1], dtype=np.int64)
    rows = table_log[nz]
    products = f.exp_array[(f.log_array[coeffs[nz]][:, None] + rows) % f.order]
    products[rows < 0] = 0
    return np.bitwise_xor.reduce(products, axis=0)


def _parity_table(f: Field, g: Poly, n: int, k: int) -> np.ndarray:
    """ Rows x^(n-1-i) mod g(x), i in [0, k), most significant coefficient first, log domain """
    r = n - k
    low = g[:r]  # x^r = g[:r] mod g(x) in characteristic 2
    rows = np.empty((k, r), dtype=np.int64)
    rem = list(low)
    # x^r is the last message position (i = k-1); walk up to x^(n-1) (i = 0)
    for i in range(k - 1, -1, -1):
        rows[i] = rem[::-1]
        top = rem[-1]
        rem = [0] + rem[:-1]
        if top:
            for j in range(r):
                rem[j] ^= f.mul(top, low[j])
    logs = f.log_array[rows]
    logs.flags.writeable = False
    return logs
