import math

import numpy as np
import pytest

from gaplab.correlations import (
    CorrelationRequest,
    NumericalFailure,
    fischer_check,
    pair_determinant_limit,
    rho_k,
    thinned_correlation,
    triple_cluster_expectation,
)
from gaplab.ensembles import EnsembleKind, sample_ginibre
from gaplab.kernels import marchenko_pastur_edges
from gaplab.quadrature import QuadratureSpec, Scheme
from gaplab.regions import Disk, LengthSet, Rectangle


class TestRhoK:
    def test_one_point_inside_disk(self):
        # rho_1/n tends to 1/pi strictly inside the unit disk
        val = rho_k(CorrelationRequest(EnsembleKind.GINIBRE, (0.5 + 0.0j,), 100))
        assert val / 100 == pytest.approx(1 / math.pi, abs=1e-3)

    def test_one_point_outside_disk(self):
        val = rho_k(CorrelationRequest(EnsembleKind.GINIBRE, (1.5 + 0.0j,), 100))
        assert val / 100 < 1e-6

    def test_coincident_points_vanish(self):
        val = rho_k(CorrelationRequest(EnsembleKind.GINIBRE,
                                       (0.3 + 0.1j, 0.3 + 0.1j), 50))
        assert val == 0.0

    def test_permutation_invariance(self):
        pts = (0.1 + 0.2j, -0.3 + 0.05j, 0.4 - 0.25j)
        a = rho_k(CorrelationRequest(EnsembleKind.GINIBRE, pts, 80))
        b = rho_k(CorrelationRequest(EnsembleKind.GINIBRE,
                                     (pts[2], pts[0], pts[1]), 80))
        assert a == pytest.approx(b, rel=1e-10)

    def test_nonnegative_on_random_bulk_points(self):
        rng = np.random.default_rng(1)
        for _ in range(25):
            k = int(rng.integers(1, 5))
            pts = tuple(0.6 * (rng.normal(size=k) + 1j * rng.normal(size=k)))
            assert rho_k(CorrelationRequest(EnsembleKind.GINIBRE, pts, 60)) >= 0

    def test_wishart_and_gue_kernels(self):
        val = rho_k(CorrelationRequest(EnsembleKind.WISHART, (0.8, 1.6), 30, m=60))
        assert val >= 0
        val = rho_k(CorrelationRequest(EnsembleKind.GUE, (0.0, 0.5), 30))
        assert val >= 0

    def test_validation(self):
        with pytest.raises(ValueError):
            CorrelationRequest(EnsembleKind.GINIBRE, (), 10)
        with pytest.raises(ValueError):
            CorrelationRequest(EnsembleKind.GINIBRE, (0j,) * 11, 10)
        with pytest.raises(ValueError):
            CorrelationRequest(EnsembleKind.WISHART, (0.5,), 10)


class TestPairDeterminant:
    def test_zero_separation(self):
        res = pair_determinant_limit(0.0, 0.0, 100, EnsembleKind.GUE)
        assert res.exact == 0.0 and res.leading == 0.0

    def test_gue_ratio_near_one(self):
        n = 500
        res = pair_determinant_limit(0.0, n ** (-4 / 3), n, EnsembleKind.GUE)
        assert res.ratio == pytest.approx(1.0, abs=0.05)

    def test_wishart_ratio_near_one(self):
        n = 400
        a, b = marchenko_pastur_edges(2.0)
        res = pair_determinant_limit(0.5 * (a + b), n ** (-4 / 3), n,
                                     EnsembleKind.WISHART, m=2 * n)
        assert res.ratio == pytest.approx(1.0, abs=0.10)

    def test_outside_bulk_rejected(self):
        with pytest.raises(ValueError):
            pair_determinant_limit(5.0, 1e-3, 50, EnsembleKind.GUE)


class TestFischer:
    def test_identity_equality(self):
        assert fischer_check(np.eye(5), [0, 1])

    def test_random_gram_matrices(self):
        rng = np.random.default_rng(2)
        for _ in range(1000):
            k = int(rng.integers(2, 9))
            g = rng.normal(size=(k, k + 2)) + 1j * rng.normal(size=(k, k + 2))
            mat = g @ g.conj().T
            omega = list(rng.choice(k, size=int(rng.integers(0, k + 1)),
                                    replace=False))
            assert fischer_check(mat, omega)

    def test_kernel_matrix_from_bulk_points(self):
        from gaplab.kernels import ginibre_s_pairs

        pts = np.array([0.1 + 0.1j, -0.2 + 0.3j, 0.4 - 0.1j, 0.0 + 0.45j, 0.3 + 0.2j])
        n = 60
        mat = ginibre_s_pairs(pts[:, None], pts[None, :], n)
        assert fischer_check(mat, [0, 1])

    def test_rejects_non_psd(self):
        with pytest.raises(ValueError):
            fischer_check(np.array([[1.0, 2.0], [2.0, 1.0]]), [0])
        with pytest.raises(ValueError):
            fischer_check(np.array([[1.0, 1.0], [0.0, 1.0]]), [0])


class TestThinned:
    def test_m0_bulk_limit(self):
        # k = 1, bulk point: tends to pi^{-2} int_B |u|^2 du = pi^{-1} int_A r^3
        a_set = LengthSet.upto(1.0)
        want = a_set.moment(3) * math.pi / math.pi**2
        got = {}
        for n in (100, 400):
            est = thinned_correlation((0.2 + 0.1j,), n, a_set, truncation=0,
                                      quad=QuadratureSpec(nodes=16))
            got[n] = est.value
        assert got[400] == pytest.approx(want, rel=0.05)
        assert abs(got[400] - want) < abs(got[100] - want) + 0.01 * want

    def test_outside_disk_decays(self):
        a_set = LengthSet.upto(1.0)
        vals = {}
        for n in (50, 150):
            vals[n] = thinned_correlation((1.5 + 0.0j,), n, a_set, truncation=0,
                                          quad=QuadratureSpec(nodes=12)).value
        assert vals[150] < vals[50]
        assert vals[150] < 1e-4

    def test_m1_within_envelope(self):
        # |S1 - S0| bounded by S0 (e^{sup rho_1 |b_n|} - 1), sup rho_1 <= n/pi
        n = 100
        a_set = LengthSet.upto(1.0)
        est = thinned_correlation((0.1 + 0.05j,), n, a_set, truncation=1,
                                  quad=QuadratureSpec(nodes=12))
        s0 = est.terms[0]
        s1 = est.terms[0] + est.terms[1]
        area_bn = a_set.moment(1) * math.pi * float(n) ** -1.5
        bound = s0 * (math.exp(n / math.pi * area_bn) - 1.0)
        assert abs(s1 - s0) <= bound * (1 + 1e-9)
        lo, hi = sorted(est.bracket)
        assert lo <= est.value <= hi

    def test_overlapping_translates_rejected(self):
        a_set = LengthSet.upto(2.0)
        n = 100
        with pytest.raises(ValueError):
            thinned_correlation((0j, 1e-3 + 0j), n, a_set, truncation=0)

    def test_order_budget(self):
        with pytest.raises(ValueError):
            thinned_correlation((0j,), 10, LengthSet.upto(0.5), truncation=30)


class TestTripleClusterExpectation:
    def test_zero_area_region(self):
        est = triple_cluster_expectation(Rectangle(0, 0, -1, 1), 2.0, 50)
        assert est.value == 0.0

    def test_decreases_with_n(self):
        vals = {}
        for n in (100, 200):
            est = triple_cluster_expectation(
                Disk(0j, 0.6), 4.0, n,
                QuadratureSpec(scheme=Scheme.MONTE_CARLO, samples=20000, seed=3))
            vals[n] = est.value
        assert vals[200] < vals[100]

    def test_requires_monte_carlo(self):
        with pytest.raises(ValueError):
            triple_cluster_expectation(Disk(0j, 0.5), 2.0, 50,
                                       QuadratureSpec(scheme=Scheme.TENSOR_GAUSS_LEGENDRE))


def test_factorial_moment_identity_small_n():
    """E[N(N-1)] over a region matches the rho_2 quadrature at n = 3."""
    from gaplab.correlations import _ginibre_rho_batch
    from gaplab.quadrature import gl_nodes

    n = 3
    region = Rectangle(-0.6, 0.6, -0.6, 0.6)
    trials = 100000
    # batched sampling and eigensolve
    mats = np.stack([sample_ginibre(n, seed).matrix for seed in range(trials)])
    vals = np.linalg.eigvals(mats)
    inside = region.contains(vals)
    counts = inside.sum(axis=1)
    ff = counts * (counts - 1)
    mean = ff.mean()
    se = ff.std(ddof=1) / math.sqrt(trials)

    nodes, weights = gl_nodes(-0.6, 0.6, 24)
    xr, yr, xi, yi = np.meshgrid(nodes, nodes, nodes, nodes, indexing="ij")
    w = np.einsum("i,j,k,l->ijkl", weights, weights, weights, weights).ravel()
    z1 = (xr + 1j * yr).ravel()
    z2 = (xi + 1j * yi).ravel()
    pts = np.stack([z1, z2], axis=1)
    rho2 = _ginibre_rho_batch(pts, n)
    integral = float(np.sum(w * rho2))
    assert abs(mean - integral) < 3 * se
