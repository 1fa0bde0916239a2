""" Table-based arithmetic over GF(2^m)

Elements are m-bit integers; addition is XOR and needs no table.
Multiplication, inversion and powers go through exp/log tables built from a primitive polynomial.

Example:
    f = field_new(9)
    f.mul(3, 3)  # -> 5
    f.inv(2)
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from .defs import MIN_M, MAX_M, DEFAULT_PRIMITIVE_POLYS


class Field:
    """ GF(2^m) arithmetic context. Immutable once built.

    Attributes:
        m: bits per symbol
        primitive_poly: the reduction polynomial, (m+1)-bit integer
        order: size of the multiplicative group, 2^m - 1
        exp_table: exp_table[i] = alpha^i, for i in [0, order)
        log_table: log_table[a] = i such that alpha^i = a; log_table[0] is -1 (undefined)
        exp_array, log_array: the same tables as numpy arrays, for vectorized evaluation
    """
    __slots__ = ('m', 'primitive_poly', 'order', 'exp_table', 'log_table', 'exp_array', 'log_array')

    m: int
    primitive_poly: int
    order: int
    exp_table: Tuple[int, ...]
    log_table: Tuple[int, ...]
    exp_array: np.ndarray
    log_array: np.ndarray

    def __init__(self, m: int, primitive_poly: Optional[int] = None):
        if not MIN_M <= m <= MAX_M:
            raise ValueError(f'Symbol size m={m} is not within [{MIN_M}, {MAX_M}]')
        if primitive_poly is None:
            primitive_poly = DEFAULT_PRIMITIVE_POLYS[m]
        if primitive_poly.bit_length() != m + 1:
            raise ValueError(f'Polynomial {primitive_poly:#x} is not of degree {m}')

        size = 1 << m
        order = size - 1
        exp = [0] * order
        log = [-1] * size

        # Walk the powers of alpha = x; a repeat before `order` steps means alpha is not primitive
        x = 1
        for i in range(order):
            if x == 0 or log[x] != -1:
                raise ValueError(f'Polynomial {primitive_poly:#x} is not primitive over GF(2)')
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & size:
                x ^= primitive_poly

        exp_array = np.array(exp, dtype=np.int64)
        log_array = np.array(log, dtype=np.int64)
        exp_array.flags.writeable = False
        log_array.flags.writeable = False

        setattr_ = object.__setattr__
        setattr_(self, 'm', m)
        setattr_(self, 'primitive_poly', primitive_poly)
        setattr_(self, 'order', order)
        setattr_(self, 'exp_table', tuple(exp))
        setattr_(self, 'log_table', tuple(log))
        setattr_(self, 'exp_array', exp_array)
        setattr_(self, 'log_array', log_array)

    def __setattr__(self, key, value):
        raise AttributeError(f'{type(self).__name__} is immutable')

    def __repr__(self):
        return f'Field(m={self.m}, primitive_poly={self.primitive_poly:#x})'

    def __reduce__(self):
        # Unpickle through the cache: worker processes rebuild the tables once
        return field_new, (self.m, self.primitive_poly)

    @property
    def size(self) -> int:
        """ Number of field elements, 2^m """
        return self.order + 1

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError('Zero has no inverse in GF(2^m)')
        return self.exp_table[-self.log_table[a] % self.order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError('Division by zero in GF(2^m)')
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % self.order]

    def pow(self, a: int, e: int) -> int:
        """ a^e; negative exponents invert. 0^0 = 1 """
        if a == 0:
            if e < 0:
                raise ZeroDivisionError('Zero has no inverse in GF(2^m)')
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[a] * e) % self.order]

    def alpha_pow(self, e: int) -> int:
        """ alpha^e for any integer e """
        return self.exp_table[e % self.order]


@lru_cache()
def field_new(m: int, primitive_poly: Optional[int] = None) -> Field:
    """ Get the GF(2^m) arithmetic context

    Fields are immutable, so the same instance is shared by everyone who asks for the same (m, polynomial).

    Args:
        m: bits per symbol, 3..12
        primitive_poly: primitive polynomial of degree m. `None`: use the default for `m`.
    Raises:
        ValueError: wrong degree, non-primitive polynomial, unsupported `m`
    """
    return Field(m, primitive_poly)
