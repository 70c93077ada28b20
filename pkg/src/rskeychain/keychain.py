"""Chunked XOR cipher with key refreshment driven by RS parity.

Sender, per 63-symbol chunk ``i``::

    c_i   = m_i XOR k_i
    cw_i  = rs_encode(c_i)
    k_i+1 = k_i XOR cw_i[63:126]      # first 63 of the 64 parity symbols

The receiver RS-decodes each codeword, refreshes the key from the
*corrected* codeword, and decrypts with the key in force before the refresh.
A chunk that fails to decode breaks the chain for everything after it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .galois import FIELD_SIZE
from .rs import K, N, DecodeReport, rs_decode, rs_encode

KEY_LEN = K
CHUNK_LEN = K


class SymbolRangeError(ValueError):
    """Input byte does not fit a 7-bit symbol."""

    def __init__(self, position: int, value: int):
        super().__init__(f"byte {value} at offset {position} is not a 7-bit symbol")
        self.position = position
        self.value = value


class StreamFormatError(ValueError):
    """Cipher stream metadata is inconsistent."""


class StreamDecodeError(Exception):
    """A codeword could not be corrected; later chunks are unrecoverable."""

    def __init__(self, chunk_index: int, report: DecodeReport):
        super().__init__(f"chunk {chunk_index} could not be decoded ({report.reason})")
        self.chunk_index = chunk_index
        self.report = report


def as_key(symbols: Sequence[int]) -> bytes:
    key = bytes(symbols)
    if len(key) != KEY_LEN:
        raise ValueError(f"key must have {KEY_LEN} symbols, got {len(key)}")
    for i, s in enumerate(key):
        if s >= FIELD_SIZE:
            raise ValueError(f"key symbol {i} = {s} is not a 7-bit symbol")
    return key


@dataclass(frozen=True)
class MessageChunk:
    symbols: bytes
    payload_len: int = CHUNK_LEN

    def __post_init__(self):
        if len(self.symbols) != CHUNK_LEN:
            raise ValueError(f"chunk must have {CHUNK_LEN} symbols")
        if not 0 <= self.payload_len <= CHUNK_LEN:
            raise ValueError("payload_len out of range")
        if any(self.symbols[self.payload_len :]):
            raise ValueError("padding symbols must be zero")


@dataclass(frozen=True)
class CipherStream:
    original_len: int
    codewords: tuple[bytes, ...] = ()

    @property
    def chunk_count(self) -> int:
        return len(self.codewords)

    def validate(self) -> None:
        if self.original_len < 0:
            raise StreamFormatError("negative original length")
        expected = math.ceil(self.original_len / CHUNK_LEN)
        if expected != self.chunk_count:
            raise StreamFormatError(
                f"original length {self.original_len} needs {expected} chunks, "
                f"stream has {self.chunk_count}"
            )
        for i, cw in enumerate(self.codewords):
            if len(cw) != N:
                raise StreamFormatError(f"codeword {i} has {len(cw)} symbols, expected {N}")


@dataclass(frozen=True)
class KeyChain:
    """``keys[0]`` is the initial key; ``keys[i]`` encrypts chunk ``i``."""

    keys: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.keys)

    def __getitem__(self, i):
        return self.keys[i]


@dataclass(frozen=True)
class ReceiveResult:
    plaintext: bytes
    chain: KeyChain
    reports: tuple[DecodeReport, ...] = field(default=())


def text_to_symbols(text: bytes) -> bytes:
    data = bytes(text)
    for i, b in enumerate(data):
        if b >= FIELD_SIZE:
            raise SymbolRangeError(i, b)
    return data


def chunk_message(symbols: Sequence[int]) -> list[MessageChunk]:
    data = bytes(symbols)
    chunks = []
    for start in range(0, len(data), CHUNK_LEN):
        part = data[start : start + CHUNK_LEN]
        chunks.append(MessageChunk(part.ljust(CHUNK_LEN, b"\x00"), len(part)))
    return chunks


def _xor(a: bytes, b: bytes) -> bytes:
    return bytes(x ^ y for x, y in zip(a, b, strict=True))


def encrypt_chunk(m: MessageChunk | bytes, k: bytes) -> bytes:
    symbols = m.symbols if isinstance(m, MessageChunk) else bytes(m)
    return _xor(symbols, as_key(k))


def decrypt_chunk(c: bytes, k: bytes) -> bytes:
    # characteristic 2: subtracting the key is the same XOR
    return _xor(bytes(c), as_key(k))


def evolve_key(k: bytes, cw: Sequence[int]) -> bytes:
    if len(cw) != N:
        raise ValueError(f"codeword must have {N} symbols, got {len(cw)}")
    return _xor(as_key(k), bytes(cw[K : K + KEY_LEN]))


def encrypt_stream(plaintext: bytes, k0: Sequence[int]) -> tuple[CipherStream, KeyChain]:
    symbols = text_to_symbols(plaintext)
    key = as_key(k0)
    keys = [key]
    codewords = []
    for chunk in chunk_message(symbols):
        cw = rs_encode(encrypt_chunk(chunk, key))
        codewords.append(cw)
        key = evolve_key(key, cw)
        keys.append(key)
    return CipherStream(len(symbols), tuple(codewords)), KeyChain(tuple(keys))


def receive_stream(stream: CipherStream, k0: Sequence[int]) -> ReceiveResult:
    """Decode and decrypt ``stream``; raises :class:`StreamDecodeError` on the first bad chunk."""
    stream.validate()
    key = as_key(k0)
    keys = [key]
    reports = []
    out = bytearray()
    for i, received in enumerate(stream.codewords):
        result = rs_decode(received)
        if not result.ok:
            raise StreamDecodeError(i, result.report)
        reports.append(result.report)
        out += decrypt_chunk(result.message, key)
        key = evolve_key(key, result.codeword)
        keys.append(key)
    return ReceiveResult(bytes(out[: stream.original_len]), KeyChain(tuple(keys)), tuple(reports))


def decrypt_stream(stream: CipherStream, k0: Sequence[int]) -> bytes:
    return receive_stream(stream, k0).plaintext


@dataclass(frozen=True)
class KeyChainStats:
    """Per-step symbol distances between consecutive keys plus distinct-key count."""

    distances: tuple[int, ...]
    distinct_keys: int

    @property
    def mean_distance(self) -> Optional[float]:
        if not self.distances:
            return None
        return sum(self.distances) / len(self.distances)


def key_chain_stats(chain: KeyChain | Iterable[bytes]) -> KeyChainStats:
    keys = list(chain.keys if isinstance(chain, KeyChain) else chain)
    if not keys:
        raise ValueError("key chain is empty")
    distances = tuple(sum(a != b for a, b in zip(p, q)) for p, q in zip(keys, keys[1:]))
    return KeyChainStats(distances, len(set(map(bytes, keys))))
