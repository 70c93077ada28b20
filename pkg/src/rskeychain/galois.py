"""Arithmetic in GF(2^7) under the primitive polynomial x^7 + x^3 + 1.

Elements are plain ``int`` values in ``[0, 127]`` whose bits are the
coefficients of a polynomial over GF(2).  Addition is XOR; multiplication
goes through exp/log tables generated from alpha = 2.

Polynomials over the field are lists of coefficients in ascending order
(``p[i]`` is the coefficient of ``x**i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

PRIM_POLY = 0b10001001  # x^7 + x^3 + 1 == 137
FIELD_SIZE = 128
ORDER = FIELD_SIZE - 1  # multiplicative group order
ALPHA = 2

GfPoly = list[int]


@dataclass(frozen=True)
class GfTables:
    """Exp/log tables for the field.

    ``exp`` holds 254 entries (two periods) so ``exp[log[a] + log[b]]``
    never needs a modulo.  ``log`` is indexed by element; ``log[0]`` is a
    placeholder (-1) and must never be used.
    """

    exp: tuple[int, ...]
    log: tuple[int, ...]


def build_tables() -> GfTables:
    exp = [0] * (2 * ORDER)
    log = [-1] * FIELD_SIZE
    v = 1
    for i in range(ORDER):
        exp[i] = v
        log[v] = i
        v <<= 1
        if v & FIELD_SIZE:
            v ^= PRIM_POLY
    if v != 1:
        raise AssertionError("alpha does not have order 127; polynomial is not primitive")
    for i in range(ORDER, 2 * ORDER):
        exp[i] = exp[i - ORDER]
    return GfTables(tuple(exp), tuple(log))


TABLES = build_tables()
EXP = TABLES.exp
LOG = TABLES.log


def _check(a: int) -> None:
    if not 0 <= a < FIELD_SIZE:
        raise ValueError(f"{a} is not an element of GF(128)")


def gf_add(a: int, b: int) -> int:
    """Field addition (and subtraction): bitwise XOR."""
    _check(a)
    _check(b)
    return a ^ b


def gf_mul(a: int, b: int) -> int:
    _check(a)
    _check(b)
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def gf_inv(a: int) -> int:
    _check(a)
    if a == 0:
        raise ZeroDivisionError("no inverse of zero in GF(128)")
    return EXP[ORDER - LOG[a]]


def gf_div(a: int, b: int) -> int:
    return gf_mul(a, gf_inv(b))


def gf_pow(a: int, e: int) -> int:
    """Raise ``a`` to the integer power ``e``; negative ``e`` inverts first."""
    _check(a)
    if a == 0:
        if e < 0:
            raise ZeroDivisionError("zero cannot be raised to a negative power")
        return 1 if e == 0 else 0
    return EXP[(LOG[a] * e) % ORDER]


def poly_trim(p: Sequence[int]) -> GfPoly:
    """Drop zero high-order coefficients; the zero polynomial becomes ``[]``."""
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_degree(p: Sequence[int]) -> int:
    """Degree of ``p``, or -1 for the zero polynomial."""
    return len(poly_trim(p)) - 1


def poly_eval(p: Sequence[int], x: int) -> int:
    """Evaluate ``p`` at ``x`` by Horner's rule."""
    _check(x)
    acc = 0
    for c in reversed(p):
        acc = gf_mul(acc, x) ^ c
    return acc


def poly_add(p: Sequence[int], q: Sequence[int]) -> GfPoly:
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] ^= c
    return poly_trim(out)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> GfPoly:
    p = poly_trim(p)
    q = poly_trim(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] ^= gf_mul(a, b)
    return poly_trim(out)


def poly_scale(p: Sequence[int], c: int) -> GfPoly:
    return poly_trim([gf_mul(a, c) for a in p])


def poly_derivative(p: Sequence[int]) -> GfPoly:
    """Formal derivative; in characteristic 2 only odd-degree terms survive."""
    return poly_trim([c if i % 2 == 1 else 0 for i, c in enumerate(p)][1:])
