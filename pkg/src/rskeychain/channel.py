"""Seeded symbol-error channel.

Randomness comes from :class:`random.Random` seeded with the caller's
64-bit seed, so a given (word, spec) pair always yields the same output.
Per-trial or per-chunk seeds are derived with :func:`derive_seed`.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .galois import FIELD_SIZE
from .rs import K, N, rs_decode, rs_encode

SEED_MASK = (1 << 64) - 1


def derive_seed(seed: int, index: int) -> int:
    """Stable 64-bit child seed for ``(seed, index)``."""
    raw = (seed & SEED_MASK).to_bytes(8, "big") + index.to_bytes(8, "big")
    return int.from_bytes(hashlib.blake2b(raw, digest_size=8).digest(), "big")


@dataclass(frozen=True)
class ChannelSpec:
    """Either ``errors_per_codeword`` (exact count) or ``symbol_error_prob`` is set."""

    errors_per_codeword: Optional[int] = None
    symbol_error_prob: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if (self.errors_per_codeword is None) == (self.symbol_error_prob is None):
            raise ValueError("set exactly one of errors_per_codeword / symbol_error_prob")
        if self.errors_per_codeword is not None and not 0 <= self.errors_per_codeword <= N:
            raise ValueError(f"errors_per_codeword must be in [0, {N}]")
        if self.symbol_error_prob is not None and not 0.0 <= self.symbol_error_prob <= 1.0:
            raise ValueError("symbol_error_prob must be in [0, 1]")
        if not 0 <= self.seed <= SEED_MASK:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def mode(self) -> str:
        return "count" if self.errors_per_codeword is not None else "prob"

    @property
    def parameter(self) -> float:
        return self.errors_per_codeword if self.mode == "count" else self.symbol_error_prob

    def with_seed(self, seed: int) -> "ChannelSpec":
        return ChannelSpec(self.errors_per_codeword, self.symbol_error_prob, seed)


def inject_errors(cw: Sequence[int], spec: ChannelSpec) -> tuple[bytes, frozenset[int]]:
    rng = random.Random(spec.seed)
    word = bytearray(cw)
    if spec.mode == "count":
        if spec.errors_per_codeword > len(word):
            raise ValueError("more errors requested than symbols in the word")
        positions = rng.sample(range(len(word)), spec.errors_per_codeword)
    else:
        positions = [i for i in range(len(word)) if rng.random() < spec.symbol_error_prob]
    for p in positions:
        word[p] ^= rng.randrange(1, FIELD_SIZE)
    return bytes(word), frozenset(positions)


class SweepRow(NamedTuple):
    parameter: float
    trials: int
    failures: int
    miscorrections: int

    @property
    def failure_rate(self) -> float:
        return self.failures / self.trials


def sweep_decode_failure_rate(
    grid: Iterable[ChannelSpec], trials: int, seed: int = 0
) -> list[SweepRow]:
    """Empirical RS decode failure rate for each channel setting in ``grid``.

    Each trial encodes a fresh random chunk.  A *miscorrection* is a claimed
    success that returns the wrong codeword; it is counted separately and
    never folded into ``failures``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rows = []
    for g, spec in enumerate(grid):
        failures = miscorrections = 0
        base = derive_seed(seed, g)
        for t in range(trials):
            trial_seed = derive_seed(base, t)
            rng = random.Random(trial_seed)
            cw = rs_encode(bytes(rng.randrange(FIELD_SIZE) for _ in range(K)))
            noisy, _ = inject_errors(cw, spec.with_seed(trial_seed))
            result = rs_decode(noisy)
            if not result.ok:
                failures += 1
            elif result.codeword != cw:
                miscorrections += 1
        rows.append(SweepRow(spec.parameter, trials, failures, miscorrections))
    return rows
