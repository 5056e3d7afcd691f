"""Quadrature rules used by the correlation integrals.

Tensor Gauss-Legendre covers smooth integrands up to four real
dimensions; beyond that Monte Carlo with an explicit seed takes over,
returning a standard-error estimate alongside the value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np


class Scheme(Enum):
    TENSOR_GAUSS_LEGENDRE = "tensor_gauss_legendre"
    MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class QuadratureSpec:
    scheme: Scheme = Scheme.TENSOR_GAUSS_LEGENDRE
    nodes: int = 24          # per real dimension (Gauss-Legendre)
    samples: int = 20000     # Monte Carlo sample count
    seed: int = 0            # Monte Carlo only

    def __post_init__(self):
        if self.nodes < 1 or self.samples < 1:
            raise ValueError("node/sample count must be >= 1")


@lru_cache(maxsize=64)
def _leggauss(n: int):
    return np.polynomial.legendre.leggauss(n)


def gl_nodes(a: float, b: float, n: int):
    """Gauss-Legendre nodes and weights on [a, b]."""
    x, w = _leggauss(n)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return mid + half * x, half * w


def half_annulus_nodes(r0: float, r1: float, n: int):
    """Polar tensor rule on {z: r0 <= |z| <= r1, arg z in [0, pi)}.

    Returns complex nodes and weights including the Jacobian r, so
    integral f dA = sum w_i f(z_i).  The boundary convention Im = 0,
    Re >= 0 has measure zero and needs no special handling here.
    """
    r, wr = gl_nodes(r0, r1, n)
    th, wth = gl_nodes(0.0, np.pi, n)
    rr, tt = np.meshgrid(r, th, indexing="ij")
    ww = np.outer(wr * r, wth)
    z = rr * np.exp(1j * tt)
    return z.ravel(), ww.ravel()


def region_nodes_union(pieces, n: int):
    """Nodes/weights for a union of disjoint half-annuli (r0, r1).

    `pieces` is an iterable of (r0, r1) radius intervals.
    """
    zs, ws = [], []
    for r0, r1 in pieces:
        z, w = half_annulus_nodes(r0, r1, n)
        zs.append(z)
        ws.append(w)
    return np.concatenate(zs), np.concatenate(ws)


def sample_half_disk(radius: float, count: int, uniforms: np.ndarray) -> np.ndarray:
    """Uniform points on the half disk {|z| <= radius, arg z in [0, pi)}."""
    u = uniforms.reshape(-1, 2)[:count]
    r = radius * np.sqrt(u[:, 0])
    theta = np.pi * u[:, 1]
    return r * np.exp(1j * theta)


def sample_half_annulus(r0: float, r1: float, count: int, uniforms: np.ndarray) -> np.ndarray:
    """Uniform points on a half annulus, inverse-CDF in the radius."""
    u = uniforms.reshape(-1, 2)[:count]
    r = np.sqrt(r0**2 + (r1**2 - r0**2) * u[:, 0])
    theta = np.pi * u[:, 1]
    return r * np.exp(1j * theta)


@dataclass(frozen=True)
class MCEstimate:
    value: float
    stderr: float
    samples: int

    def __float__(self) -> float:
        return self.value


def mc_mean(values: np.ndarray, volume: float) -> MCEstimate:
    """Monte Carlo integral estimate: volume * mean, with standard error."""
    n = values.size
    mean = float(np.mean(values))
    se = float(np.std(values, ddof=1) / np.sqrt(n)) if n > 1 else float("inf")
    return MCEstimate(volume * mean, volume * se, n)
