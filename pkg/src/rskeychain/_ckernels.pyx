# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled RS kernels; same contract as ``_pykernels``."""

from .galois import EXP as _PY_EXP, LOG as _PY_LOG

NAME = "cython"

cdef enum:
    ORD = 127
    MAXN = 256

cdef int EXP[254]
cdef int LOG[128]

cdef int _i
for _i in range(254):
    EXP[_i] = _PY_EXP[_i]
for _i in range(128):
    LOG[_i] = _PY_LOG[_i]


cdef inline int _mul(int a, int b) noexcept nogil:
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def encode_parity(msg, gen):
    cdef int nsym = len(gen) - 1
    cdef int g[MAXN]
    cdef int reg[MAXN]
    cdef int i, fb, lf, m
    if nsym >= MAXN:
        raise ValueError("generator too long")
    for i in range(nsym):
        c = gen[nsym - 1 - i]
        g[i] = LOG[c] if c else -1
        reg[i] = 0
    for m in msg:
        fb = m ^ reg[0]
        for i in range(nsym - 1):
            reg[i] = reg[i + 1]
        reg[nsym - 1] = 0
        if fb:
            lf = LOG[fb]
            for i in range(nsym):
                if g[i] >= 0:
                    reg[i] ^= EXP[lf + g[i]]
    return bytes([reg[i] for i in range(nsym)])


def syndromes(word, int nsym, int fcr):
    cdef int n = len(word)
    cdef int w[MAXN]
    cdef int i, j, la, acc
    if n > MAXN:
        raise ValueError("word too long")
    for j in range(n):
        w[j] = word[j]
    out = []
    for i in range(nsym):
        la = (fcr + i) % ORD
        acc = 0
        for j in range(n):
            acc = (EXP[LOG[acc] + la] if acc else 0) ^ w[j]
        out.append(acc)
    return out


def berlekamp_massey(synd):
    cdef int ns = len(synd)
    cdef int s[MAXN]
    cdef int c[MAXN + 1]
    cdef int b[MAXN + 1]
    cdef int prev[MAXN + 1]
    cdef int i, n, d, coef, length = 0, shift = 1, last_d = 1
    if ns > MAXN:
        raise ValueError("too many syndromes")
    for i in range(ns):
        s[i] = synd[i]
    for i in range(ns + 1):
        c[i] = 0
        b[i] = 0
    c[0] = 1
    b[0] = 1
    for n in range(ns):
        d = s[n]
        for i in range(1, length + 1):
            d ^= _mul(c[i], s[n - i])
        if d == 0:
            shift += 1
            continue
        coef = EXP[LOG[d] - LOG[last_d] + ORD]
        if 2 * length <= n:
            for i in range(ns + 1):
                prev[i] = c[i]
            for i in range(ns + 1 - shift):
                c[i + shift] ^= _mul(coef, b[i])
            length = n + 1 - length
            for i in range(ns + 1):
                b[i] = prev[i]
            last_d = d
            shift = 1
        else:
            for i in range(ns + 1 - shift):
                c[i + shift] ^= _mul(coef, b[i])
            shift += 1
    i = ns
    while i > 0 and c[i] == 0:
        i -= 1
    return [c[k] for k in range(i + 1)]


def chien_search(locator, int n):
    cdef int nl = len(locator)
    cdef int lg[MAXN + 1]
    cdef int i, j, inv_log, acc
    if nl > MAXN + 1:
        raise ValueError("locator too long")
    for i in range(nl):
        c = locator[i]
        lg[i] = LOG[c] if c else -1
    found = []
    for j in range(n):
        inv_log = (ORD - (n - 1 - j) % ORD) % ORD
        acc = 0
        for i in range(nl):
            if lg[i] >= 0:
                acc ^= EXP[(lg[i] + inv_log * i) % ORD]
        if acc == 0:
            found.append(j)
    return found


def forney(locator, synd, positions, int n, int fcr):
    cdef int nsym = len(synd)
    cdef int nl = len(locator)
    cdef int omega[MAXN]
    cdef int lam[MAXN + 1]
    cdef int i, k, j, deg, xinv, num, den, mag, s
    if nsym > MAXN or nl > MAXN + 1:
        raise ValueError("input too long")
    for i in range(nl):
        lam[i] = locator[i]
    for i in range(nsym):
        omega[i] = 0
    for i in range(nsym):
        s = synd[i]
        if s:
            for k in range(nl):
                if i + k >= nsym:
                    break
                omega[i + k] ^= _mul(s, lam[k])
    mags = []
    for j in positions:
        deg = n - 1 - j
        xinv = EXP[(ORD - deg % ORD) % ORD]
        num = 0
        for i in range(nsym - 1, -1, -1):
            num = _mul(num, xinv) ^ omega[i]
        den = 0
        for k in range(nl - 1, 0, -1):
            den = _mul(den, xinv) ^ (lam[k] if k % 2 == 1 else 0)
        if den == 0:
            return None
        mag = _mul(num, EXP[ORD - LOG[den]])
        if mag and fcr != 1:
            mag = _mul(mag, EXP[((deg * (1 - fcr)) % ORD + ORD) % ORD])
        mags.append(mag)
    return mags
