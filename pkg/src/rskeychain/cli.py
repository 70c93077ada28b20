"""Command-line interface.

Exit codes: 0 success, 1 usage or format error, 2 decode failure.
"""

from __future__ import annotations

import argparse
import os
import random
import secrets
import sys
import tempfile
from pathlib import Path

from . import BACKEND, __version__
from .channel import ChannelSpec, derive_seed, inject_errors
from .formats import FormatError, parse_key, parse_stream, serialize_key, serialize_stream
from .keychain import (
    KEY_LEN,
    CipherStream,
    StreamDecodeError,
    SymbolRangeError,
    encrypt_stream,
    evolve_key,
    key_chain_stats,
    receive_stream,
)
from .rs import N, rs_decode

EXIT_OK = 0
EXIT_FORMAT = 1
EXIT_DECODE = 2


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_FORMAT):
        super().__init__(message)
        self.code = code


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write_atomic(path: str, data: bytes) -> None:
    target = Path(path)
    try:
        fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, target)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from None


def _load_key(path: str) -> bytes:
    return parse_key(_read(path))


def _load_stream(path: str) -> CipherStream:
    return parse_stream(_read(path))


def cmd_keygen(args) -> int:
    if args.seed is None:
        key = bytes(secrets.randbelow(128) for _ in range(KEY_LEN))
    else:
        rng = random.Random(args.seed)
        key = bytes(rng.randrange(128) for _ in range(KEY_LEN))
    _write_atomic(args.out, serialize_key(key))
    return EXIT_OK


def cmd_encrypt(args) -> int:
    key = _load_key(args.key)
    plaintext = _read(args.inp)
    try:
        stream, _ = encrypt_stream(plaintext, key)
    except SymbolRangeError as exc:
        raise CliError(f"{args.inp}: {exc}") from None
    _write_atomic(args.out, serialize_stream(stream))
    return EXIT_OK


def cmd_decrypt(args) -> int:
    key = _load_key(args.key)
    stream = _load_stream(args.inp)
    try:
        result = receive_stream(stream, key)
    except StreamDecodeError as exc:
        raise CliError(f"decode failure at chunk {exc.chunk_index}: {exc.report.reason}", EXIT_DECODE)
    _write_atomic(args.out, result.plaintext)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    if not 0 <= args.errors <= N:
        raise CliError(f"--errors must be in [0, {N}]")
    stream = _load_stream(args.inp)
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"seed: {seed}", file=sys.stderr)
    noisy = tuple(
        inject_errors(cw, ChannelSpec(errors_per_codeword=args.errors, seed=derive_seed(seed, i)))[0]
        for i, cw in enumerate(stream.codewords)
    )
    _write_atomic(args.out, serialize_stream(CipherStream(stream.original_len, noisy)))
    return EXIT_OK


def inspect_report(key: bytes, stream: CipherStream) -> tuple[str, bool]:
    """Human-readable dry-run of the receiver; second item is False if any chunk failed."""
    lines = [
        f"chunks: {stream.chunk_count}",
        f"original length: {stream.original_len}",
        f"k0: {key.hex()}",
    ]
    keys = [key]
    ok = True
    current = key
    for i, cw in enumerate(stream.codewords):
        result = rs_decode(cw)
        if result.ok:
            status = f"corrected {result.report.corrected_count}"
        else:
            status = f"FAILED ({result.report.reason})"
            ok = False
        lines.append(f"chunk {i}: {status}")
        lines.append(f"  parity: {result.codeword[63:].hex()}")
        if current is not None and result.ok:
            current = evolve_key(current, result.codeword)
            keys.append(current)
            lines.append(f"  k{i + 1}: {current.hex()}")
            lines.append(f"  k{i + 1} (dec): {' '.join(map(str, current))}")
        else:
            current = None
            lines.append(f"  k{i + 1}: unknown")
    stats = key_chain_stats(keys)
    lines.append(f"key chain length: {len(keys)}")
    lines.append(f"distances: {list(stats.distances)}")
    lines.append(f"distinct keys: {stats.distinct_keys}")
    if stats.mean_distance is not None:
        lines.append(f"mean distance: {stats.mean_distance:.2f}")
    return "\n".join(lines), ok


def cmd_inspect(args) -> int:
    key = _load_key(args.key)
    stream = _load_stream(args.inp)
    text, _ = inspect_report(key, stream)
    print(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit status 2, which is reserved for decode failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FORMAT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rskeychain", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("keygen", help="write a random 63-symbol key file")
    s.add_argument("--seed", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_keygen)

    for name, func, help_ in (
        ("encrypt", cmd_encrypt, "encrypt an ASCII file into a stream file"),
        ("decrypt", cmd_decrypt, "decode and decrypt a stream file"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--key", required=True)
        s.add_argument("--in", dest="inp", required=True)
        s.add_argument("--out", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("corrupt", help="inject symbol errors into every codeword")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--errors", type=int, required=True)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_corrupt)

    s = sub.add_parser("inspect", help="report per-chunk corrections and the key chain")
    s.add_argument("--key", required=True)
    s.add_argument("--in", dest="inp", required=True)
    s.set_defaults(func=cmd_inspect)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"rskeychain: {exc}", file=sys.stderr)
        return exc.code
    except FormatError as exc:
        print(f"rskeychain: format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
