import math

import numpy as np
import pytest

from gaplab.laws import LimitLaw
from gaplab.rng import RandomStream
from gaplab.stats import (
    SampleSet,
    factorial_moment_test,
    ks_test,
    poisson_dispersion_test,
)


class TestSampleSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            SampleSet(np.array([2.0, 1.0]))
        with pytest.raises(ValueError):
            SampleSet(np.array([0.0, np.nan]))
        s = SampleSet(np.array([1.0, 2.0, 3.0]))
        assert s.n == 3


class TestKsTest:
    def test_inverse_transform_self_consistency(self):
        # samples drawn from the k=1 quartic law by its exact inverse
        # CDF should almost never reject
        stream = RandomStream(77)
        law = LimitLaw(q=4, k=1)
        rejections = 0
        reps = 300
        for _ in range(reps):
            u = stream.uniforms(10000)
            x = np.sort((-np.log1p(-u)) ** 0.25)  # inverse of 1 - e^{-x^4}
            rep = ks_test(SampleSet(x), law.cdf)
            rejections += rep.p_value <= 0.001
        assert rejections / reps <= 0.01

    def test_level_is_approximately_uniform(self):
        # empirical rejection rate at alpha = 0.05 within [0.03, 0.07]
        stream = RandomStream(123)
        reject = 0
        reps = 2000
        for _ in range(reps):
            u = np.sort(stream.uniforms(1000))
            rep = ks_test(SampleSet(u), lambda x: x)
            reject += rep.p_value < 0.05
        assert 0.03 <= reject / reps <= 0.07

    def test_constant_samples_degenerate_cdf(self):
        c = 0.6
        samples = SampleSet(np.full(100, c))
        law = LimitLaw(q=4, k=1)
        rep = ks_test(samples, law.cdf)
        f = law.cdf(c)
        assert rep.statistic == pytest.approx(max(f, 1 - f), abs=1e-12)

    def test_invariance_under_monotone_reparameterization(self):
        stream = RandomStream(5)
        x = np.sort(stream.uniforms(500))
        d1 = ks_test(SampleSet(x), lambda t: t).statistic
        y = np.sort(x**3)  # strictly increasing transform
        d2 = ks_test(SampleSet(y), lambda t: np.cbrt(t)).statistic
        assert d1 == pytest.approx(d2, abs=1e-12)

    def test_needs_enough_samples(self):
        with pytest.raises(ValueError):
            ks_test(SampleSet(np.linspace(0, 1, 10)), lambda t: t)


def _poisson_counts(lam, size, stream):
    # inverse-CDF Poisson sampling from the shared uniform source
    u = stream.uniforms(size)
    out = np.zeros(size, dtype=int)
    for i, ui in enumerate(u):
        k, cdf, pmf = 0, math.exp(-lam), math.exp(-lam)
        while cdf < ui and k < 200:
            k += 1
            pmf *= lam / k
            cdf += pmf
        out[i] = k
    return out


class TestFactorialMoments:
    def test_all_zero_counts_mu_zero(self):
        rep = factorial_moment_test(np.zeros(50), mu=0.0, k_max=2)
        assert rep.passed

    def test_poisson_counts_pass(self):
        stream = RandomStream(9)
        passes = 0
        reps = 120
        for _ in range(reps):
            counts = _poisson_counts(2.0, 10000, stream)
            rep = factorial_moment_test(counts, mu=2.0, k_max=3)
            passes += rep.passed
        assert passes / reps >= 0.95

    def test_power_against_wrong_mu(self):
        stream = RandomStream(10)
        counts = _poisson_counts(2.0, 10000, stream)
        rep = factorial_moment_test(counts, mu=1.0, k_max=1)
        assert not rep.passed

    def test_k1_is_mean_test(self):
        counts = np.array([0, 1, 2, 3, 4] * 30, dtype=float)
        rep = factorial_moment_test(counts, mu=2.0, k_max=1)
        mean = counts.mean()
        se = counts.std(ddof=1) / math.sqrt(len(counts))
        assert rep.details["per_k"][1]["mean"] == pytest.approx(mean)
        assert rep.details["per_k"][1]["se"] == pytest.approx(se, rel=1e-6)


class TestDispersion:
    def test_poisson_counts_pass_rate(self):
        stream = RandomStream(11)
        passes = 0
        reps = 150
        for _ in range(reps):
            counts = _poisson_counts(3.0, 400, stream)
            rep = poisson_dispersion_test(counts)
            passes += rep.passed
        assert passes / reps >= 0.98

    def test_constant_counts_fail(self):
        rep = poisson_dispersion_test(np.full(200, 4))
        assert rep.statistic == 0.0
        assert not rep.passed

    def test_overdispersed_mixture_fails(self):
        stream = RandomStream(12)
        u = stream.uniforms(400)
        counts = np.where(u < 0.5, 0, 8)  # variance 16 vs mean 4
        rep = poisson_dispersion_test(counts)
        assert not rep.passed

    def test_degenerate_zero_mean(self):
        rep = poisson_dispersion_test(np.zeros(150))
        assert rep.passed is None
