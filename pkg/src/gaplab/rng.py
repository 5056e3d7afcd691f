"""Reproducible random streams.

Every trial owns its own counter-based Philox stream, keyed by a 64-bit
seed derived from (master_seed, trial_index) with a splitmix64 finisher.
Gaussians are produced by a fixed Box-Muller transform applied to raw
Philox output, so equal seeds give bit-identical samples regardless of
NumPy's distribution-method versioning.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_TWO53_INV = 2.0 ** -53


def splitmix64(x: int) -> int:
    """splitmix64 finishing mix of a 64-bit integer."""
    x &= _MASK64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK64
    return (x ^ (x >> 31)) & _MASK64


def derive_seed(master_seed: int, trial_index: int) -> int:
    """64-bit per-trial seed, statistically independent across indices."""
    if trial_index < 0:
        raise ValueError("trial_index must be nonnegative")
    return splitmix64((master_seed + _GOLDEN * (trial_index + 1)) & _MASK64)


class RandomStream:
    """Deterministic uniform/Gaussian source backed by a Philox counter.

    All draws consume `random_raw` 64-bit words of the Philox bit
    generator; the word-to-double mappings are fixed here:

    - uniform on [0, 1):  (raw >> 11) * 2^-53
    - uniform on (0, 1]:  ((raw >> 11) + 1) * 2^-53
    - Gaussian pairs: Box-Muller, z0 = sqrt(-2 ln u1) cos(2 pi u2),
      z1 = sqrt(-2 ln u1) sin(2 pi u2), with u1 on (0, 1].
    """

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self._bitgen = np.random.Philox(key=self.seed)

    def raw(self, count: int) -> np.ndarray:
        return self._bitgen.random_raw(count)

    def uniforms(self, count: int) -> np.ndarray:
        """i.i.d. uniforms on [0, 1)."""
        return (self.raw(count) >> np.uint64(11)).astype(np.float64) * _TWO53_INV

    def uniforms_open(self, count: int) -> np.ndarray:
        """i.i.d. uniforms on (0, 1] (safe under log)."""
        r = (self.raw(count) >> np.uint64(11)).astype(np.float64)
        return (r + 1.0) * _TWO53_INV

    def gaussians(self, count: int) -> np.ndarray:
        """i.i.d. standard normals; pairs laid out [z0_0, z1_0, z0_1, ...]."""
        pairs = (count + 1) // 2
        u1 = self.uniforms_open(pairs)
        u2 = self.uniforms(pairs)
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = 2.0 * np.pi * u2
        out = np.empty(2 * pairs)
        out[0::2] = radius * np.cos(angle)
        out[1::2] = radius * np.sin(angle)
        return out[:count]

    def complex_gaussians(self, count: int) -> np.ndarray:
        """Standard complex normals (u + iv)/sqrt(2), E|z|^2 = 1."""
        g = self.gaussians(2 * count)
        return (g[0::2] + 1j * g[1::2]) / np.sqrt(2.0)
