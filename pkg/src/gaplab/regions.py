"""Regions of the complex plane and length sets on the positive axis.

These are the `I` and `A` arguments of the counting statistics and
intensity formulas: `I` is a bounded region (disk, rectangle, interval
on the real line, or the whole space), `A` a finite union of disjoint
intervals of gap lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.integrate import quad


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def contains(self, z) -> np.ndarray:
        return np.abs(np.asarray(z) - self.center) <= self.radius

    @property
    def area(self) -> float:
        return math.pi * self.radius**2

    def sample(self, uniforms: np.ndarray) -> np.ndarray:
        """Uniform points from pairs of uniforms (inverse-CDF radius)."""
        u = uniforms.reshape(-1, 2)
        r = self.radius * np.sqrt(u[:, 0])
        theta = 2.0 * np.pi * u[:, 1]
        return self.center + r * np.exp(1j * theta)


@dataclass(frozen=True)
class Rectangle:
    x0: float
    x1: float
    y0: float
    y1: float

    def contains(self, z) -> np.ndarray:
        z = np.asarray(z)
        return (
            (z.real >= self.x0)
            & (z.real <= self.x1)
            & (z.imag >= self.y0)
            & (z.imag <= self.y1)
        )

    @property
    def area(self) -> float:
        return max(self.x1 - self.x0, 0.0) * max(self.y1 - self.y0, 0.0)

    def sample(self, uniforms: np.ndarray) -> np.ndarray:
        u = uniforms.reshape(-1, 2)
        x = self.x0 + (self.x1 - self.x0) * u[:, 0]
        y = self.y0 + (self.y1 - self.y0) * u[:, 1]
        return x + 1j * y


@dataclass(frozen=True)
class WholePlane:
    def contains(self, z) -> np.ndarray:
        return np.ones(np.shape(np.asarray(z)), dtype=bool)

    @property
    def area(self) -> float:
        return math.inf


@dataclass(frozen=True)
class RealInterval:
    """Window on the real line; membership ignores imaginary parts."""

    lo: float
    hi: float

    def contains(self, x) -> np.ndarray:
        x = np.real(np.asarray(x))
        return (x > self.lo) & (x < self.hi)

    @property
    def length(self) -> float:
        return max(self.hi - self.lo, 0.0)


Region = Disk | Rectangle | WholePlane | RealInterval


def area_in_unit_disk(region: Region) -> float:
    """Lebesgue measure of region intersected with D(0, 1)."""
    if isinstance(region, WholePlane):
        return math.pi
    if isinstance(region, Disk):
        return _disk_disk_area(region.center, region.radius, 0.0 + 0.0j, 1.0)
    if isinstance(region, Rectangle):
        x0 = max(region.x0, -1.0)
        x1 = min(region.x1, 1.0)
        if x0 >= x1:
            return 0.0

        def chord(x: float) -> float:
            half = math.sqrt(max(1.0 - x * x, 0.0))
            return max(min(region.y1, half) - max(region.y0, -half), 0.0)

        value, _ = quad(chord, x0, x1, limit=200)
        return value
    raise ValueError(f"unsupported region type: {type(region).__name__}")


def _disk_disk_area(c1: complex, r1: float, c2: complex, r2: float) -> float:
    d = abs(c1 - c2)
    if d >= r1 + r2:
        return 0.0
    if d <= abs(r1 - r2):
        r = min(r1, r2)
        return math.pi * r * r
    # lens area of two overlapping circles
    a1 = r1 * r1 * math.acos((d * d + r1 * r1 - r2 * r2) / (2 * d * r1))
    a2 = r2 * r2 * math.acos((d * d + r2 * r2 - r1 * r1) / (2 * d * r2))
    corr = 0.5 * math.sqrt(
        max((-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2), 0.0)
    )
    return a1 + a2 - corr


class LengthSet:
    """Finite union of disjoint intervals of nonnegative lengths."""

    def __init__(self, intervals: Sequence[tuple]):
        ivals = sorted((float(a), float(b)) for a, b in intervals)
        for lo, hi in ivals:
            if lo < 0 or hi < lo:
                raise ValueError("intervals must satisfy 0 <= lo <= hi")
        for (a0, b0), (a1, b1) in zip(ivals, ivals[1:]):
            if a1 < b0:
                raise ValueError("intervals must be disjoint")
        self.intervals = tuple(ivals)

    @classmethod
    def upto(cls, s: float) -> "LengthSet":
        return cls([(0.0, s)])

    def contains(self, r) -> np.ndarray:
        r = np.asarray(r)
        hit = np.zeros(r.shape, dtype=bool)
        for lo, hi in self.intervals:
            hit |= (r >= lo) & (r < hi)
        return hit

    def moment(self, power: int) -> float:
        """Integral of r^power over the set."""
        p = power + 1
        return sum((hi**p - lo**p) / p for lo, hi in self.intervals)

    @property
    def sup(self) -> float:
        return self.intervals[-1][1] if self.intervals else 0.0

    def __iter__(self):
        return iter(self.intervals)

    def __repr__(self) -> str:
        return f"LengthSet({list(self.intervals)!r})"
