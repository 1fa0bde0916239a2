""" Polynomials over GF(2^m)

A polynomial is a list of coefficients, constant term first: [2, 3, 1] is x^2 + 3x + 2.
Addition and subtraction are the same thing: coefficient-wise XOR.
"""
from typing import Tuple, Sequence

from msirs.annotations import Poly
from msirs.gf import Field


def poly_trim(p: Sequence[int]) -> Poly:
    """ Drop zero leading (high-order) coefficients. The zero polynomial becomes [] """
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return out


def poly_scale(f: Field, p: Sequence[int], c: int) -> Poly:
    return [f.mul(x, c) for x in p]


def poly_mul(f: Field, a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= f.mul(x, y)
    return out


def poly_eval(f: Field, p: Sequence[int], x: int) -> int:
    """ Evaluate p(x), Horner's rule """
    acc = 0
    for c in reversed(p):
        acc = f.mul(acc, x) ^ c
    return acc


def poly_divmod(f: Field, num: Sequence[int], den: Sequence[int]) -> Tuple[Poly, Poly]:
    """ Long division: num = quot * den + rem, deg(rem) < deg(den)

    Returns:
        (quotient, remainder), both trimmed
    """
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError('Polynomial division by zero')
    rem = list(num)
    dd = len(den) - 1
    lead_inv = f.inv(den[-1])
    quot = [0] * max(len(rem) - dd, 0)
    for i in range(len(rem) - 1, dd - 1, -1):
        coef = rem[i]
        if coef == 0:
            continue
        q = f.mul(coef, lead_inv)
        quot[i - dd] = q
        for j, d in enumerate(den):
            rem[i - dd + j] ^= f.mul(q, d)
    return poly_trim(quot), poly_trim(rem[:dd])


def poly_derivative(p: Sequence[int]) -> Poly:
    """ Formal derivative in characteristic 2: only odd-power terms survive """
    return [c if i % 2 == 1 else 0 for i, c in enumerate(p)][1:]
