"""Closed-form limiting objects: Poisson intensities and the k-th
smallest gap laws.

The gap laws form a two-parameter family: exponent q (4 for the complex
plane, 3 for the real line) and order k, with density
q/Gamma(k) x^{qk-1} e^{-x^q} and CDF P(k, x^q) in terms of the lower
regularized incomplete gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .ensembles import EnsembleKind
from .quadrature import gl_nodes
from .regions import LengthSet, RealInterval, Region, area_in_unit_disk
from .special import regularized_gamma_p


@dataclass(frozen=True)
class LimitLaw:
    q: int
    k: int = 1

    def __post_init__(self):
        if self.q not in (3, 4):
            raise ValueError("q must be 3 (real line) or 4 (complex plane)")
        if self.k < 1:
            raise ValueError("k must be >= 1")

    @property
    def normalization(self) -> float:
        return self.q / math.gamma(self.k)

    def density(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = self.normalization * x_arr ** (self.q * self.k - 1) * np.exp(-x_arr**self.q)
        return np.where(x_arr < 0, 0.0, out)

    def cdf(self, x):
        scalar = np.ndim(x) == 0
        x_arr = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(x_arr < 0):
            raise ValueError("x must be nonnegative")
        out = np.array([regularized_gamma_p(float(self.k), float(t**self.q))
                        for t in x_arr])
        return float(out[0]) if scalar else out

    def sf(self, x):
        return 1.0 - self.cdf(x)

    def ppf(self, p: float) -> float:
        """Quantile by bracketing; used for inverse-transform sampling."""
        if not 0.0 <= p < 1.0:
            raise ValueError("p must lie in [0, 1)")
        if p == 0.0:
            return 0.0
        hi = 1.0
        while self.cdf(hi) < p:
            hi *= 2.0
        return float(brentq(lambda t: self.cdf(t) - p, 0.0, hi, xtol=1e-12))


def kth_gap_cdf(law: LimitLaw, x):
    """P(tau_k <= x) = P_reg(k, x^q): monotone, 0 at 0, tends to 1."""
    return law.cdf(x)


def joint_box_probability(xs, q: int) -> float:
    """Limiting P(x_l < tau_l < y_l for all l) for interleaved boxes.

    xs is the flattened strictly interleaved sequence
    x_1 < y_1 < ... < x_k < y_k of positive reals; the value is
    (e^{-x_k^q} - e^{-y_k^q}) prod_{l<k} (y_l^q - x_l^q).
    """
    xs = [float(v) for v in xs]
    if len(xs) < 2 or len(xs) % 2 != 0:
        raise ValueError("need an even-length sequence x1,y1,...,xk,yk")
    if xs[0] <= 0 or any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("sequence must be strictly increasing and positive")
    pairs = [(xs[2 * i], xs[2 * i + 1]) for i in range(len(xs) // 2)]
    xk, yk = pairs[-1]
    value = math.exp(-xk**q) - math.exp(-yk**q)
    for a, b in pairs[:-1]:
        value *= b**q - a**q
    return value


@dataclass(frozen=True)
class IntensityQuery:
    ensemble: EnsembleKind
    lengths: LengthSet
    region: Region
    beta: float | None = None       # Wishart
    eps0: float = 0.0               # real-line bulk margin
    density: object = None          # DensityFn for UUE/GUE


def poisson_intensity(query: IntensityQuery) -> float:
    """Limit intensity mu(A x I) of the scaled gap point process.

    Ginibre integrates r^3 dr over the gap lengths against the share of
    I inside the unit disk; the i.i.d. baseline integrates r dr; the
    real-line ensembles integrate (pi^2/3) u^2 du against the fourth
    power of the spectral density over the window.
    """
    kind = query.ensemble
    if kind is EnsembleKind.GINIBRE:
        return area_in_unit_disk(query.region) / math.pi * query.lengths.moment(3)
    if kind is EnsembleKind.IID_DISK:
        return area_in_unit_disk(query.region) / math.pi * query.lengths.moment(1)
    if kind in (EnsembleKind.WISHART, EnsembleKind.GUE, EnsembleKind.UUE):
        if kind is EnsembleKind.WISHART:
            from .kernels import marchenko_pastur_density
            if query.beta is None:
                raise ValueError("Wishart intensity needs beta")
            dens = marchenko_pastur_density(query.beta)
        else:
            from .kernels import semicircle_density
            dens = query.density or semicircle_density()
        if not isinstance(query.region, RealInterval):
            raise ValueError("real-line ensembles need a RealInterval window")
        a, b = dens.support
        lo, hi = query.region.lo, query.region.hi
        if lo < a + query.eps0 or hi > b - query.eps0:
            raise ValueError("window must lie inside the eps0-bulk")
        x, w = gl_nodes(lo, hi, 512)
        integral = float(np.sum(w * dens(x) ** 4))
        return math.pi**2 / 3.0 * query.lengths.moment(2) * integral
    raise ValueError(f"no intensity formula for {kind}")
