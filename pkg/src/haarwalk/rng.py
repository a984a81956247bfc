"""Seeded, splittable random-number streams."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_U64 = 2**64


@dataclass(frozen=True)
class RngSeed:
    """Base seed plus a sub-stream selector.

    Equal (seed, stream_id) pairs reproduce identical sample sequences
    bit for bit; distinct stream_ids give statistically independent
    streams, so parallel trials can share one base seed.
    """

    seed: int
    stream_id: int = 0

    def __post_init__(self):
        if not (0 <= self.seed < _U64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not (0 <= self.stream_id < _U64):
            raise ValueError("stream_id must be a 64-bit unsigned integer")

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream."""
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,))
        return np.random.default_rng(ss)

    def child(self, index: int) -> "RngSeed":
        """Derive an independent sub-seed, deterministic in (self, index).

        Splitting goes through SeedSequence hashing, so children of
        different indices (and children of children) never share streams.
        """
        if index < 0:
            raise ValueError("child index must be non-negative")
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id, index))
        new_seed, new_stream = ss.generate_state(2, np.uint64)
        return RngSeed(int(new_seed), int(new_stream))
