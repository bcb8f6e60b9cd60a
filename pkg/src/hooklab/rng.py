"""Seeded random source shared by the evaluation and simulation code."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_MASK64 = (1 << 64) - 1


@dataclass
class RandomSource:
    """A reproducible stream of random draws.

    Identical ``(seed, stream)`` pairs give identical draw sequences on every
    platform (PCG64 fed by a ``SeedSequence`` whose spawn key is the stream).
    Not thread-safe; give each worker its own instance.
    """

    seed: int = 0
    stream: int = 0
    _gen: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not (0 <= self.seed <= _MASK64 and 0 <= self.stream <= _MASK64):
            raise ValueError("seed and stream must be 64-bit unsigned integers")
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream,))
        self._gen = np.random.Generator(np.random.PCG64(seq))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return int(self._gen.integers(lo, hi, endpoint=True))

    def sample(self, population: list, k: int) -> list:
        idx = self._gen.choice(len(population), size=k, replace=False)
        return [population[int(i)] for i in idx]

    def choice(self, population: list):
        return population[int(self._gen.integers(0, len(population)))]

    def uint64(self, size: int) -> np.ndarray:
        """``size`` independent uniform 64-bit words."""
        return self._gen.integers(0, _MASK64, size=size, dtype=np.uint64, endpoint=True)
