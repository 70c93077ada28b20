import struct

import pytest
from hypothesis import given, settings, strategies as st

from rskeychain.formats import (
    HEADER_LEN,
    FormatError,
    parse_key,
    parse_stream,
    serialize_key,
    serialize_stream,
)
from rskeychain.keychain import CipherStream, encrypt_stream

from vectors import CODE1, CODE2, INITIAL_KEY

ascii_text = st.binary(max_size=300).map(lambda b: bytes(x & 0x7F for x in b))


def test_header_layout():
    blob = serialize_stream(CipherStream(92, (CODE1, CODE2)))
    assert HEADER_LEN == 17
    assert blob[:4] == b"RSKC" and blob[4] == 1
    assert struct.unpack(">I", blob[5:9])[0] == 2
    assert struct.unpack(">Q", blob[9:17])[0] == 92
    assert blob[17:] == CODE1 + CODE2


def test_empty_stream():
    blob = serialize_stream(CipherStream(0, ()))
    assert len(blob) == HEADER_LEN
    assert parse_stream(blob) == CipherStream(0, ())


@settings(max_examples=50, deadline=None)
@given(ascii_text)
def test_roundtrip(text):
    stream, _ = encrypt_stream(text, INITIAL_KEY)
    blob = serialize_stream(stream)
    assert all(b < 128 for b in blob[HEADER_LEN:])
    assert parse_stream(blob) == stream


def _good():
    return bytearray(serialize_stream(CipherStream(92, (CODE1, CODE2))))


@pytest.mark.parametrize(
    "mutate,match",
    [
        (lambda b: b.__setitem__(slice(0, 4), b"RSKX"), "magic"),
        (lambda b: b.__setitem__(4, 2), "version"),
        (lambda b: b.__setitem__(slice(5, 9), struct.pack(">I", 3)), "declares"),
        (lambda b: b.__setitem__(slice(9, 17), struct.pack(">Q", 200)), "needs"),
        (lambda b: b.__setitem__(slice(9, 17), struct.pack(">Q", 0)), "needs"),
        (lambda b: b.__delitem__(slice(-1, None)), "declares"),
        (lambda b: b.__delitem__(slice(10, None)), "shorter"),
        (lambda b: b.__setitem__(50, 0x80 | b[50]), "offset 50"),
    ],
)
def test_malformed_rejected(mutate, match):
    blob = _good()
    mutate(blob)
    with pytest.raises(FormatError, match=match):
        parse_stream(bytes(blob))


def test_key_file():
    assert parse_key(INITIAL_KEY) == INITIAL_KEY
    assert serialize_key(INITIAL_KEY) == INITIAL_KEY
    with pytest.raises(FormatError):
        parse_key(INITIAL_KEY[:-1])
    with pytest.raises(FormatError, match="offset 3"):
        parse_key(INITIAL_KEY[:3] + b"\xff" + INITIAL_KEY[4:])
