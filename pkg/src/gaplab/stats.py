"""Statistical verdicts for Monte Carlo output against limiting laws."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import chi2

from .special import kolmogorov_sf


@dataclass
class SampleSet:
    """Sorted real samples with enough metadata to recompute the target."""

    values: np.ndarray
    seeds: tuple = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("samples must be finite")
        if np.any(np.diff(self.values) < 0):
            raise ValueError("samples must be sorted ascending")

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass
class TestReport:
    name: str
    statistic: float
    p_value: float | None
    passed: bool | None
    n_samples: int
    target: str
    details: dict = field(default_factory=dict)


def ks_test(samples, cdf, level: float = 0.001) -> TestReport:
    """One-sample Kolmogorov-Smirnov test against a callable CDF.

    D_N = sup |F_emp - F| with the asymptotic Kolmogorov p-value (no
    small-sample correction; sample sizes here are >= 10^3).
    """
    if not isinstance(samples, SampleSet):
        samples = SampleSet(np.sort(np.asarray(samples, dtype=float)))
    n = samples.n
    if n < 50:
        raise ValueError("KS test needs at least 50 samples")
    f = np.asarray(cdf(samples.values), dtype=float)
    if np.any(~np.isfinite(f)) or np.any(f < -1e-12) or np.any(f > 1 + 1e-12):
        raise ValueError("cdf must map samples into [0, 1]")
    grid = np.arange(1, n + 1) / n
    d_plus = float(np.max(grid - f))
    d_minus = float(np.max(f - (np.arange(n) / n)))
    d = max(d_plus, d_minus)
    p = kolmogorov_sf(math.sqrt(n) * d)
    return TestReport(name="ks", statistic=d, p_value=p,
                      passed=p > level, n_samples=n,
                      target=samples.meta.get("target", "cdf"),
                      details={"d_plus": d_plus, "d_minus": d_minus,
                               "level": level})


def _jackknife_se(values: np.ndarray) -> float:
    """Delete-one jackknife standard error of the sample mean."""
    n = len(values)
    if n < 2:
        return math.inf
    total = np.sum(values)
    loo = (total - values) / (n - 1)
    return float(np.sqrt((n - 1) / n * np.sum((loo - np.mean(loo)) ** 2)))


def factorial_moment_test(counts, mu: float, k_max: int,
                          n_sigma: float = 3.0) -> TestReport:
    """Compare sample factorial moments E[N(N-1)...(N-k+1)] to mu^k.

    Passes iff every order k <= k_max lies within `n_sigma` jackknife
    standard errors of mu^k; at k = 1 this reduces to a mean test.
    """
    counts = np.asarray(counts, dtype=float)
    if counts.size == 0:
        raise ValueError("counts must be nonempty")
    if mu < 0 or k_max < 1:
        raise ValueError("mu must be >= 0 and k_max >= 1")
    per_k = {}
    worst = 0.0
    all_pass = True
    for k in range(1, k_max + 1):
        ff = np.ones_like(counts)
        for j in range(k):
            ff = ff * (counts - j)
        mean = float(np.mean(ff))
        se = _jackknife_se(ff)
        target = mu**k
        if se == 0.0:
            ok = mean == target
            z = 0.0 if ok else math.inf
        else:
            z = abs(mean - target) / se
            ok = z <= n_sigma
        per_k[k] = {"mean": mean, "target": target, "se": se, "z": z,
                    "passed": ok}
        worst = max(worst, 0.0 if math.isinf(z) and ok else z)
        all_pass = all_pass and ok
    return TestReport(name="factorial_moment", statistic=worst, p_value=None,
                      passed=all_pass, n_samples=len(counts),
                      target=f"Poisson({mu:g}) factorial moments",
                      details={"per_k": per_k, "n_sigma": n_sigma})


def poisson_dispersion_test(counts, level: float = 0.01) -> TestReport:
    """Index-of-dispersion test (N-1) s^2 / mean against chi-square.

    Two-sided at the given level; a zero mean yields a degenerate
    report with no verdict.
    """
    counts = np.asarray(counts, dtype=float)
    n = counts.size
    if n < 100:
        raise ValueError("dispersion test needs at least 100 counts")
    mean = float(np.mean(counts))
    if mean == 0.0:
        return TestReport(name="dispersion", statistic=math.nan, p_value=None,
                          passed=None, n_samples=n, target="Poisson dispersion",
                          details={"mean": 0.0, "note": "degenerate: zero mean"})
    stat = (n - 1) * float(np.var(counts, ddof=1)) / mean
    lo = chi2.ppf(level / 2.0, n - 1)
    hi = chi2.ppf(1.0 - level / 2.0, n - 1)
    p = 2.0 * min(chi2.cdf(stat, n - 1), chi2.sf(stat, n - 1))
    return TestReport(name="dispersion", statistic=stat, p_value=float(min(p, 1.0)),
                      passed=bool(lo <= stat <= hi), n_samples=n,
                      target="Poisson dispersion",
                      details={"mean": mean, "lo": lo, "hi": hi,
                               "level": level})
