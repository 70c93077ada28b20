"""On-disk formats.

Stream file::

    b"RSKC" | version u8 (=1) | chunk_count u32 BE | original_len u64 BE
    chunk_count x 127 bytes, one symbol per byte

Key file: 63 raw bytes, one symbol per byte.  Every symbol byte must have
its high bit clear.
"""

from __future__ import annotations

import struct

from .keychain import KEY_LEN, CipherStream, StreamFormatError
from .rs import N

MAGIC = b"RSKC"
VERSION = 1
_HEADER = struct.Struct(">4sBIQ")
HEADER_LEN = _HEADER.size


class FormatError(StreamFormatError):
    """File does not match the key or stream layout."""


def _check_symbols(data: bytes, base: int, what: str) -> None:
    for i, b in enumerate(data):
        if b & 0x80:
            raise FormatError(f"{what}: byte at offset {base + i} has its high bit set")


def serialize_stream(stream: CipherStream) -> bytes:
    stream.validate()
    head = _HEADER.pack(MAGIC, VERSION, stream.chunk_count, stream.original_len)
    return head + b"".join(stream.codewords)


def parse_stream(data: bytes) -> CipherStream:
    if len(data) < HEADER_LEN:
        raise FormatError(f"stream file shorter than the {HEADER_LEN}-byte header")
    magic, version, count, original_len = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    body = data[HEADER_LEN:]
    if len(body) != count * N:
        raise FormatError(f"header declares {count} codewords but body has {len(body)} bytes")
    _check_symbols(body, HEADER_LEN, "stream")
    stream = CipherStream(original_len, tuple(body[i * N : (i + 1) * N] for i in range(count)))
    try:
        stream.validate()
    except StreamFormatError as exc:
        raise FormatError(str(exc)) from None
    return stream


def serialize_key(key: bytes) -> bytes:
    return parse_key(bytes(key))


def parse_key(data: bytes) -> bytes:
    if len(data) != KEY_LEN:
        raise FormatError(f"key file must be {KEY_LEN} bytes, got {len(data)}")
    _check_symbols(data, 0, "key")
    return bytes(data)
