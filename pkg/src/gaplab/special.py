"""Scalar special functions shared across the library.

The regularized incomplete gamma pair (P, Q) is implemented once and
reused both for the kernel remainder on the positive axis and for the
k-th smallest gap CDFs.  The series form also accepts complex second
argument, which is what the kernel remainder needs just off the real
axis.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln

_MAX_ITER = 20000
_TINY = 1e-300


def _gamma_p_series(a: float, x) -> tuple:
    """Lower regularized gamma by power series.

    Returns (value, log_prefactor, series_sum) so callers can keep the
    result in log form when the value underflows.  Valid for |x| < a + 1
    in the complex case and converging (if slowly) up to |x| ~ a.
    """
    term = 1.0 / a
    total = term
    for k in range(1, _MAX_ITER):
        term = term * x / (a + k)
        total += term
        if abs(term) < abs(total) * 1e-17:
            break
    log_pref = a * np.log(x + 0j) - x - gammaln(a)
    return np.exp(log_pref) * total, log_pref, total


def _gamma_q_contfrac(a: float, x) -> tuple:
    """Upper regularized gamma by Lentz continued fraction (Re x > 0)."""
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b if b != 0 else 1.0 / _TINY
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b = b + 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    log_pref = a * np.log(x + 0j) - x - gammaln(a)
    return np.exp(log_pref) * h, log_pref, h


def regularized_gamma_p(a: float, x):
    """Lower regularized incomplete gamma P(a, x) = gamma(a, x)/Gamma(a).

    Series for x < a + 1, continued fraction for the complement
    otherwise.  `x` may be complex with Re x >= 0 (analytic
    continuation along the straight ray), in which case a complex value
    is returned.
    """
    if a <= 0:
        raise ValueError("a must be positive")
    xc = complex(x)
    if xc == 0:
        return 0.0 if not isinstance(x, complex) else 0.0 + 0.0j
    if xc.real < 0:
        raise ValueError("x must have nonnegative real part")
    if abs(xc) < a + 1.0:
        value, _, _ = _gamma_p_series(a, xc)
    else:
        qvalue, _, _ = _gamma_q_contfrac(a, xc)
        value = 1.0 - qvalue
    if not isinstance(x, complex) and not np.iscomplexobj(x):
        return float(value.real)
    return value


def regularized_gamma_q(a: float, x):
    """Upper regularized incomplete gamma Q(a, x) = 1 - P(a, x)."""
    if a <= 0:
        raise ValueError("a must be positive")
    xc = complex(x)
    if xc == 0:
        return 1.0
    if xc.real < 0:
        raise ValueError("x must have nonnegative real part")
    if abs(xc) < a + 1.0:
        value, _, _ = _gamma_p_series(a, xc)
        out = 1.0 - value
    else:
        out, _, _ = _gamma_q_contfrac(a, xc)
    if not isinstance(x, complex) and not np.iscomplexobj(x):
        return float(out.real)
    return out


def log_abs_gamma_p(a: float, x) -> float:
    """log |P(a, x)|, accurate even when P underflows to 0 in doubles."""
    if a <= 0:
        raise ValueError("a must be positive")
    xc = complex(x)
    if xc == 0:
        return -math.inf
    if abs(xc) < a + 1.0:
        _, log_pref, series = _gamma_p_series(a, xc)
        return float(log_pref.real) + math.log(abs(series))
    qvalue, _, _ = _gamma_q_contfrac(a, xc)
    p = 1.0 - qvalue
    return math.log(abs(p)) if p != 0 else -math.inf


def log_abs_gamma_q(a: float, x) -> float:
    """log |Q(a, x)|, accurate in the deep upper tail."""
    if a <= 0:
        raise ValueError("a must be positive")
    xc = complex(x)
    if abs(xc) < a + 1.0:
        q = regularized_gamma_q(a, x)
        return math.log(abs(q)) if q != 0 else -math.inf
    _, log_pref, h = _gamma_q_contfrac(a, xc)
    return float(log_pref.real) + math.log(abs(h))


def kolmogorov_sf(t: float, terms: int = 20) -> float:
    """Survival function of the Kolmogorov statistic, 20-term series.

    Q(t) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 t^2).
    """
    if t <= 0:
        return 1.0
    total = 0.0
    for j in range(1, terms + 1):
        total += (-1) ** (j - 1) * math.exp(-2.0 * j * j * t * t)
    return float(min(max(2.0 * total, 0.0), 1.0))
