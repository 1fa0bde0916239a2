""" Errors-and-erasures decoding of a single RS codeword

Pipeline:
1. Syndromes S_0 .. S_(r-1)
2. Erasure locator Gamma(x) = prod (1 + X_i x) over the erased positions
3. Berlekamp-Massey, seeded with Gamma, on the remaining r - f syndromes: the errata locator Lambda(x)
4. Chien search over the real (shortened) support
5. Forney's formula for the errata magnitudes
6. Full syndrome re-check of the corrected word

The decoding radius is 2e + f <= r: the whole redundancy is used, even when r is odd.
Failure is a status, not an exception.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, FrozenSet, Iterable, List

import numpy as np

from msirs.annotations import SymbolsT
from msirs.gf import Field
from .code import RsCode, syndromes
from .poly import poly_mul, poly_eval, poly_derivative, poly_trim


@enum.unique
class DecodeStatus(enum.Enum):
    SUCCESS = 'success'
    FAILURE = 'failure'


@dataclass(frozen=True, eq=False)
class DecodeResult:
    """ Outcome of decoding one component codeword """
    status: DecodeStatus

    # The corrected codeword. `None` on failure
    codeword: Optional[np.ndarray]

    # Symbol indices whose value was changed by the decoder.
    # Includes erased positions whose filled-in value differs from the received one.
    error_positions: FrozenSet[int] = frozenset()

    # The erasure set the decoder was given
    erasures: FrozenSet[int] = frozenset()

    @property
    def ok(self) -> bool:
        return self.status is DecodeStatus.SUCCESS

    @property
    def errors_outside_erasures(self) -> FrozenSet[int]:
        return self.error_positions - self.erasures

    @classmethod
    def failure(cls, erasures: FrozenSet[int] = frozenset()) -> DecodeResult:
        return cls(DecodeStatus.FAILURE, None, frozenset(), erasures)


def decode(code: RsCode, received: SymbolsT, erasures: Iterable[int] = ()) -> DecodeResult:
    """ Combined errors-and-erasures decoding

    Corrects any e errors outside the erasures, plus the f erased symbols, whenever 2e + f <= r.
    Beyond that radius it either reports failure or, like any bounded-distance decoder, miscorrects.

    Args:
        code: the RS code
        received: n received symbols
        erasures: positions known to be unreliable
    Raises:
        ValueError: wrong length; more than r erasures; erasure position out of range
    """
    f = code.field
    n, r = code.n, code.r
    word = np.asarray(received, dtype=np.int64)
    if word.size != n:
        raise ValueError(f'{code!r} words have {n} symbols, got {word.size}')
    erased = frozenset(int(i) for i in erasures)
    if len(erased) > r:
        raise ValueError(f'{len(erased)} erasures exceed the redundancy r={r}')
    if any(not 0 <= i < n for i in erased):
        raise ValueError(f'Erasure positions must be within [0, {n}): {sorted(erased)}')

    synd = syndromes(code, word).tolist()
    if not any(synd):
        return DecodeResult(DecodeStatus.SUCCESS, word.copy(), frozenset(), erased)

    # Locators: position i sits at alpha^(n-1-i)
    gamma = [1]
    for i in sorted(erased):
        gamma = poly_mul(f, gamma, [1, f.alpha_pow(n - 1 - i)])

    lam = berlekamp_massey(f, synd, gamma, len(erased))
    if lam is None:
        return DecodeResult.failure(erased)

    # Radius: 2e + f <= r, where the errata locator degree is e + f
    degree = len(lam) - 1
    n_errors = degree - len(erased)
    if n_errors < 0 or 2 * n_errors + len(erased) > r:
        return DecodeResult.failure(erased)

    positions = chien_search(f, lam, n)
    if len(positions) != degree:
        return DecodeResult.failure(erased)

    # Errata evaluator Omega(x) = Lambda(x) S(x) mod x^r
    omega = poly_mul(f, lam, synd)[:r]
    lam_prime = poly_derivative(lam)

    corrected = word.copy()
    changed = set()
    for i in positions:
        power = n - 1 - i
        x_inv = f.alpha_pow(-power)
        denominator = poly_eval(f, lam_prime, x_inv)
        if denominator == 0:
            return DecodeResult.failure(erased)
        magnitude = f.mul(
            f.mul(f.alpha_pow(power * (1 - code.b)), poly_eval(f, omega, x_inv)),
            f.inv(denominator),
        )
        if magnitude:
            corrected[i] ^= magnitude
            changed.add(i)

    # Never trust the locator blindly: the corrected word must be a codeword
    if syndromes(code, corrected).any():
        return DecodeResult.failure(erased)

    return DecodeResult(DecodeStatus.SUCCESS, corrected, frozenset(changed), erased)


def berlekamp_massey(f: Field, synd: List[int], gamma: List[int], n_erasures: int) -> Optional[List[int]]:
    """ Berlekamp-Massey seeded with the erasure locator

    Args:
        synd: syndromes S_0 .. S_(r-1)
        gamma: erasure locator, constant term first
        n_erasures: deg(gamma)
    Returns:
        The errata locator Lambda(x), trimmed, constant term first; `None` if it is inconsistent
    """
    lam = list(gamma)
    prev = list(gamma)
    length = n_erasures
    for k in range(n_erasures, len(synd)):
        # Discrepancy
        delta = 0
        for i in range(min(k, len(lam) - 1) + 1):
            if lam[i] and synd[k - i]:
                delta ^= f.mul(lam[i], synd[k - i])

        # prev <- x * prev
        prev = [0] + prev
        if delta == 0:
            continue

        correction = [f.mul(delta, c) for c in prev]
        updated = lam + [0] * (len(correction) - len(lam)) if len(correction) > len(lam) else list(lam)
        for i, c in enumerate(correction):
            updated[i] ^= c

        if 2 * length <= k + n_erasures:
            delta_inv = f.inv(delta)
            prev = [f.mul(delta_inv, c) for c in lam]
            length = k + 1 + n_erasures - length
        lam = updated

    lam = poly_trim(lam)
    if not lam or lam[0] != 1 or len(lam) - 1 > length:
        return None
    return lam


def chien_search(f: Field, locator: List[int], n: int) -> List[int]:
    """ Positions i in [0, n) where locator(alpha^-(n-1-i)) == 0

    Only the real support of a shortened code is searched:
    a root at a virtual (always-zero) position means the locator is wrong.
    """
    powers = np.arange(n - 1, -1, -1, dtype=np.int64)
    acc = np.zeros(n, dtype=np.int64)
    for j, coef in enumerate(locator):
        if coef:
            acc ^= f.exp_array[(f.log_table[coef] - j * powers) % f.order]
    return np.flatnonzero(acc == 0).tolist()
