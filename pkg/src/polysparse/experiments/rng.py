"""Seeded, order-independent random streams.

Every draw comes from a Philox (counter-based) generator keyed by
``(seed, stream, index)`` through :class:`numpy.random.SeedSequence`, so a
sample's randomness depends only on its index and never on how samples are
split across workers.

Normal variates use the Marsaglia polar method on those uniforms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import NormalDist

import numpy as np

# stream ids
CUTS = 1
SIGNS = 2
ROTATIONS = 3
GAUSSIANS = 4
DIRECTIONS = 5
PERMUTATIONS = 6


@dataclass(frozen=True)
class RandomSource:
    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def generator(self, index: int) -> np.random.Generator:
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream, index))
        return np.random.Generator(np.random.Philox(seq))

    def substream(self, stream: int) -> "RandomSource":
        return RandomSource(self.seed, stream)

    def gaussians(self, index: int, n: int) -> np.ndarray:
        return polar_gaussians(self.generator(index), n)

    def signs(self, index: int, n: int) -> np.ndarray:
        return self.generator(index).integers(0, 2, size=n, dtype=np.int64) * 2 - 1


def polar_gaussians(gen: np.random.Generator, n: int) -> np.ndarray:
    """``n`` standard normals by the Marsaglia polar method."""
    out = np.empty(n)
    have = 0
    while have < n:
        pairs = (n - have + 1) // 2
        m = int(pairs / 0.78) + 8
        u = gen.random(m) * 2.0 - 1.0
        v = gen.random(m) * 2.0 - 1.0
        s = u * u + v * v
        ok = (s > 0.0) & (s < 1.0)
        u, v, s = u[ok], v[ok], s[ok]
        f = np.sqrt(-2.0 * np.log(s) / s)
        z = np.empty(2 * len(s))
        z[0::2] = u * f
        z[1::2] = v * f
        take = min(len(z), n - have)
        out[have:have + take] = z[:take]
        have += take
    return out


def wilson_interval(successes: int, trials: int, confidence: float = 0.99):
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("no trials")
    z = NormalDist().inv_cdf(0.5 + confidence / 2)
    p = successes / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)
