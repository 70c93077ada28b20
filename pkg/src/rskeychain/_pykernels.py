"""Pure-Python RS kernels.

Reference implementation of the hot loops; ``_ckernels`` must agree with it
on every input.  Words are indexable sequences of symbols in transmission
order: index ``j`` of an ``n``-symbol word is the coefficient of
``x**(n - 1 - j)``.  Locator/evaluator polynomials are ascending lists.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .galois import EXP, LOG, ORDER

NAME = "python"


def _mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def encode_parity(msg: Sequence[int], gen: Sequence[int]) -> bytes:
    """Remainder of ``msg(x) * x**nsym`` modulo the monic ``gen`` (ascending).

    Returned highest-degree first, ready to append after ``msg``.
    """
    nsym = len(gen) - 1
    # gen coefficients below the leading 1, highest degree first
    g = [LOG[c] if c else -1 for c in reversed(gen[:-1])]
    reg = [0] * nsym
    for m in msg:
        fb = m ^ reg[0]
        reg.pop(0)
        reg.append(0)
        if fb:
            lf = LOG[fb]
            for i in range(nsym):
                if g[i] >= 0:
                    reg[i] ^= EXP[lf + g[i]]
    return bytes(reg)


def syndromes(word: Sequence[int], nsym: int, fcr: int) -> list[int]:
    out = []
    for i in range(nsym):
        la = (fcr + i) % ORDER
        acc = 0
        for c in word:
            acc = (EXP[LOG[acc] + la] if acc else 0) ^ c
        out.append(acc)
    return out


def berlekamp_massey(synd: Sequence[int]) -> list[int]:
    """Shortest LFSR (connection polynomial, ascending, C[0] = 1) for ``synd``."""
    c = [1] + [0] * len(synd)
    b = [1] + [0] * len(synd)
    length = 0
    shift = 1
    last_d = 1
    for n in range(len(synd)):
        d = synd[n]
        for i in range(1, length + 1):
            d ^= _mul(c[i], synd[n - i])
        if d == 0:
            shift += 1
            continue
        coef = EXP[LOG[d] - LOG[last_d] + ORDER]
        if 2 * length <= n:
            prev = c[:]
            for i in range(len(c) - shift):
                c[i + shift] ^= _mul(coef, b[i])
            length = n + 1 - length
            b = prev
            last_d = d
            shift = 1
        else:
            for i in range(len(c) - shift):
                c[i + shift] ^= _mul(coef, b[i])
            shift += 1
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def chien_search(locator: Sequence[int], n: int) -> list[int]:
    """Word indices ``j`` whose locator ``X = alpha**(n-1-j)`` has ``locator(1/X) == 0``."""
    lg = [LOG[c] if c else -1 for c in locator]
    found = []
    for j in range(n):
        inv_log = (ORDER - (n - 1 - j)) % ORDER
        acc = 0
        for i, l in enumerate(lg):
            if l >= 0:
                acc ^= EXP[(l + inv_log * i) % ORDER]
        if acc == 0:
            found.append(j)
    return found


def forney(
    locator: Sequence[int], synd: Sequence[int], positions: Sequence[int], n: int, fcr: int
) -> Optional[list[int]]:
    """Error magnitudes at ``positions``; ``None`` if a denominator vanishes."""
    nsym = len(synd)
    omega = [0] * nsym
    for i, s in enumerate(synd):
        if s:
            for k, l in enumerate(locator):
                if i + k >= nsym:
                    break
                omega[i + k] ^= _mul(s, l)
    mags = []
    for j in positions:
        deg = n - 1 - j
        xinv = EXP[(ORDER - deg) % ORDER]
        num = 0
        for c in reversed(omega):
            num = _mul(num, xinv) ^ c
        den = 0
        # formal derivative: odd-degree terms of the locator
        for k in range(len(locator) - 1, 0, -1):
            den = _mul(den, xinv) ^ (locator[k] if k % 2 == 1 else 0)
        if den == 0:
            return None
        mag = _mul(num, EXP[ORDER - LOG[den]])
        if mag and fcr != 1:
            mag = _mul(mag, EXP[(deg * (1 - fcr)) % ORDER])
        mags.append(mag)
    return mags
