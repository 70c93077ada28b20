"""Systematic RS(127, 63) over GF(128) with a bounded-distance decoder.

Convention (locked against the published worked example):

* generator roots are alpha**1 .. alpha**64 (``FCR = 1``);
* a codeword is sent first-symbol-first, and symbol ``j`` is the coefficient
  of ``x**(126 - j)``.  The 63 message symbols come first, then 64 parity
  symbols.

Error positions are always reported as codeword indices ``j``; the matching
error locator is ``alpha**(126 - j)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from . import _backend
from .galois import EXP, ORDER, FIELD_SIZE, poly_mul

N = 127
K = 63
NSYM = N - K
T = NSYM // 2
FCR = 1

log = logging.getLogger(__name__)


class CodecError(ValueError):
    """Input to the codec violates its length or symbol-range contract."""


@dataclass(frozen=True)
class DecodeReport:
    corrected_count: int = 0
    error_positions: frozenset[int] = frozenset()
    success: bool = True
    reason: str = ""


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of :func:`rs_decode`.

    On failure ``message`` is ``None`` and ``codeword`` is the received word,
    untouched.
    """

    message: Optional[bytes]
    codeword: bytes
    report: DecodeReport = field(default_factory=DecodeReport)

    @property
    def ok(self) -> bool:
        return self.report.success


def _as_symbols(data: Sequence[int], length: int, what: str) -> bytes:
    if len(data) != length:
        raise CodecError(f"{what} must have {length} symbols, got {len(data)}")
    out = bytes(data)
    for i, s in enumerate(out):
        if s >= FIELD_SIZE:
            raise CodecError(f"{what} symbol {i} = {s} is outside GF(128)")
    return out


@lru_cache(maxsize=None)
def _generator() -> tuple[int, ...]:
    g = [1]
    for i in range(FCR, FCR + NSYM):
        g = poly_mul(g, [EXP[i % ORDER], 1])
    return tuple(g)


def rs_generator_poly() -> list[int]:
    """Monic degree-64 generator, ascending coefficients."""
    return list(_generator())


def rs_encode(msg: Sequence[int]) -> bytes:
    m = _as_symbols(msg, K, "message chunk")
    return m + _backend.kernels.encode_parity(m, _generator())


def syndromes(received: Sequence[int]) -> list[int]:
    """``S[i] = r(alpha**(FCR + i))`` for ``i = 0..63``."""
    r = _as_symbols(received, N, "codeword")
    return _backend.kernels.syndromes(r, NSYM, FCR)


def berlekamp_massey(synd: Sequence[int]) -> list[int]:
    """Error locator polynomial (ascending, constant term 1)."""
    return _backend.kernels.berlekamp_massey(list(synd))


def chien_search(locator: Sequence[int]) -> Optional[list[int]]:
    """Codeword indices flagged by the locator's roots.

    Returns ``None`` when the number of roots in range differs from the
    locator's degree, which means the word is not decodable.
    """
    positions = _backend.kernels.chien_search(list(locator), N)
    if len(positions) != len(locator) - 1:
        return None
    return positions


def forney(
    locator: Sequence[int], synd: Sequence[int], positions: Sequence[int]
) -> Optional[list[int]]:
    """Error magnitudes for ``positions`` (``None`` on a vanishing derivative)."""
    return _backend.kernels.forney(list(locator), list(synd), list(positions), N, FCR)


def _fail(received: bytes, reason: str) -> DecodeResult:
    log.debug("rs_decode failed: %s", reason)
    return DecodeResult(None, received, DecodeReport(0, frozenset(), False, reason))


def rs_decode(received: Sequence[int]) -> DecodeResult:
    r = _as_symbols(received, N, "codeword")
    k = _backend.kernels
    synd = k.syndromes(r, NSYM, FCR)
    if not any(synd):
        return DecodeResult(r[:K], r)

    locator = k.berlekamp_massey(synd)
    nerr = len(locator) - 1
    if nerr > T:
        return _fail(r, f"locator degree {nerr} exceeds t={T}")
    positions = chien_search(locator)
    if positions is None:
        return _fail(r, "root count does not match locator degree")
    mags = k.forney(locator, synd, positions, N, FCR)
    if mags is None or not all(mags):
        return _fail(r, "Forney magnitude computation failed")

    fixed = bytearray(r)
    for j, e in zip(positions, mags):
        fixed[j] ^= e
    fixed = bytes(fixed)
    if any(k.syndromes(fixed, NSYM, FCR)):
        return _fail(r, "corrected word is not a codeword")
    report = DecodeReport(len(positions), frozenset(positions), True)
    return DecodeResult(fixed[:K], fixed, report)


def is_codeword(word: Sequence[int]) -> bool:
    return not any(syndromes(word))
