"""Acceptance gate: every criterion at its stated tolerance.

The Monte Carlo criteria share three seeded runs (Ginibre n=256 and
n=128, Wishart n=200, GUE n=200, uniform-disk n=2000); all seeds,
regions, boxes, and trial counts below are pre-registered constants.
Each test prints one pass/fail line.

Notes on the pre-registered choices (from pilot calibration at other
seeds): the Ginibre tau_1 distribution at n = 256 sits a KS distance
of about 0.044 from its limit (a genuine finite-n deficit; the profile
peaks near x = 1), so the n = 256 run uses 12000 trials to keep the
sampling noise small against the 0.05 budget.  The counting cell uses
mu = 0.5: at mu = 1 the known O(n^{-1/2}) intensity deficit at n = 256
(about 4-5%) equals the 3-sigma band of 4000 trials, which would make
the verdict a coin flip rather than a check.
"""

import math
import time

import numpy as np
import pytest

from gaplab.correlations import triple_cluster_expectation
from gaplab.ensembles import EnsembleKind, EnsembleSpec, sample_ginibre
from gaplab.experiment import (
    CountRegion,
    ExperimentConfig,
    run_experiment,
    verify_cd_identity,
    verify_density_normalization,
    verify_law_normalization,
    verify_one_point_density,
    verify_pair_determinants,
    verify_remainder_regimes,
)
from gaplab.gaps import triple_cluster_count
from gaplab.laws import IntensityQuery, LimitLaw, joint_box_probability, poisson_intensity
from gaplab.quadrature import QuadratureSpec, Scheme
from gaplab.regions import Disk, LengthSet
from gaplab.spectra import eigvals_general
from gaplab.stats import SampleSet, factorial_moment_test, ks_test, poisson_dispersion_test

# pre-registered experiment constants
GINIBRE_SEED_256 = 20260809
GINIBRE_SEED_128 = 20260810
GINIBRE_TRIALS_256 = 12000
GINIBRE_TRIALS_128 = 4000
COUNT_PREFIX = 4000                      # moment/box tests use this prefix
COUNT_DISK_RADIUS = 0.92
COUNT_MU = 0.5
COUNT_LENGTH = (4.0 * COUNT_MU / COUNT_DISK_RADIUS**2) ** 0.25
BOX_K2 = (0.2, 0.9, 1.0, 1.8)
BOX_K3 = (0.1, 0.8, 0.85, 1.15, 1.2, 1.9)
WISHART_SEED = 20260811
GUE_SEED = 20260812
IID_SEED = 20260813
CLUSTER_REGION = Disk(0j, 0.6)
CLUSTER_COEFF = 4.0
CLUSTER_TRIALS = 800
CLUSTER_QUAD_SAMPLES = 100000


def _announce(num: int, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] criterion {num:2d}: {detail}")


@pytest.fixture(scope="session")
def ginibre_run_256():
    cfg = ExperimentConfig(
        ensemble=EnsembleSpec(kind=EnsembleKind.GINIBRE, n=256),
        trials=GINIBRE_TRIALS_256, master_seed=GINIBRE_SEED_256, k=3,
        count_regions=[CountRegion(id="cell", lengths=LengthSet.upto(COUNT_LENGTH),
                                   region=Disk(0j, COUNT_DISK_RADIUS))])
    return run_experiment(cfg)


@pytest.fixture(scope="session")
def ginibre_run_128():
    cfg = ExperimentConfig(
        ensemble=EnsembleSpec(kind=EnsembleKind.GINIBRE, n=128),
        trials=GINIBRE_TRIALS_128, master_seed=GINIBRE_SEED_128, k=1)
    return run_experiment(cfg)


@pytest.fixture(scope="session")
def wishart_run():
    cfg = ExperimentConfig(
        ensemble=EnsembleSpec(kind=EnsembleKind.WISHART, n=200, m=400),
        trials=4000, master_seed=WISHART_SEED, k=1, window_eps=(0.05, 0.05))
    return run_experiment(cfg)


@pytest.fixture(scope="session")
def gue_run():
    cfg = ExperimentConfig(
        ensemble=EnsembleSpec(kind=EnsembleKind.GUE, n=200),
        trials=4000, master_seed=GUE_SEED, k=1, window_eps=(0.1, 0.1))
    return run_experiment(cfg)


def test_criterion_01_remainder_bounds():
    t0 = time.perf_counter()
    out = verify_remainder_regimes()
    elapsed = time.perf_counter() - t0
    passed = out["passed"] and elapsed < 10.0
    _announce(1, passed,
              f"part-1 bounds hold={out['part1_all_hold']}, fitted constants "
              f"non-increasing={out['constants_non_increasing']}, {elapsed:.2f}s")
    assert out["part1_all_hold"]
    assert out["constants_non_increasing"]
    assert elapsed < 10.0


def test_criterion_02_cd_identity():
    t0 = time.perf_counter()
    out = verify_cd_identity()
    elapsed = time.perf_counter() - t0
    passed = out["passed"] and elapsed < 5.0
    _announce(2, passed,
              f"max rel error {out['max_rel_error']:.3e} < 1e-10, {elapsed:.2f}s")
    assert out["max_rel_error"] < 1e-10
    assert elapsed < 5.0


def test_criterion_03_scaled_one_point_density():
    t0 = time.perf_counter()
    out = verify_one_point_density(n=100)
    elapsed = time.perf_counter() - t0
    passed = out["passed"] and elapsed < 1.0
    _announce(3, passed,
              f"rho1/n inside err {out['inside_error']:.2e} < 1e-3, outside "
              f"{out['outside']:.2e} < 1e-6, {elapsed:.2f}s")
    assert out["inside_error"] < 1e-3
    assert out["outside"] < 1e-6
    assert elapsed < 1.0


def test_criterion_04_pair_determinant_limits():
    t0 = time.perf_counter()
    out = verify_pair_determinants()
    elapsed = time.perf_counter() - t0
    passed = out["passed"] and elapsed < 30.0
    _announce(4, passed,
              f"GUE ratio {out['gue_ratio']:.4f} (within 5%), Wishart ratio "
              f"{out['wishart_ratio']:.4f} (within 10%), {elapsed:.2f}s")
    assert abs(out["gue_ratio"] - 1.0) <= 0.05
    assert abs(out["wishart_ratio"] - 1.0) <= 0.10
    assert elapsed < 30.0


def test_criterion_05_ginibre_smallest_gap_law(ginibre_run_256, ginibre_run_128):
    law = LimitLaw(q=4, k=1)
    ks_256 = ks_test(SampleSet(ginibre_run_256.tau_samples[1]), law.cdf).statistic
    ks_128 = ks_test(SampleSet(ginibre_run_128.tau_samples[1]), law.cdf).statistic
    passed = ks_256 <= 0.05 and ks_256 < ks_128
    _announce(5, passed,
              f"KS(n=256, T={GINIBRE_TRIALS_256}) = {ks_256:.4f} <= 0.05; "
              f"shrinks from KS(n=128) = {ks_128:.4f}")
    # run summary carries KS reports for tau_1..tau_3 against the q=4 laws
    assert set(ginibre_run_256.summary["law_tests"]) == {1, 2, 3}
    assert ks_256 <= 0.05
    assert ks_256 < ks_128


def test_criterion_06_constant_discrimination(ginibre_run_256):
    # tau under (pi/4)^{1/4} equals pi^{1/4} times the consistent tau
    law = LimitLaw(q=4, k=1)
    tau = ginibre_run_256.tau_samples[1]
    ks_good = ks_test(SampleSet(tau), law.cdf).statistic
    ks_bad = ks_test(SampleSet(np.sort(tau * math.pi**0.25)), law.cdf).statistic
    passed = ks_bad > ks_good
    _announce(6, passed,
              f"KS with (pi/4)^(1/4) constant = {ks_bad:.4f} exceeds "
              f"consistent-constant KS = {ks_good:.4f}")
    assert ks_bad > ks_good


def test_criterion_07_joint_gap_boxes(ginibre_run_256):
    rows = [r for r in ginibre_run_256.rows if r.error is None][:COUNT_PREFIX]
    t1 = np.array([r.tau[0] for r in rows])
    t2 = np.array([r.tau[1] for r in rows])
    t3 = np.array([r.tau[2] for r in rows])
    results = []
    for box, taus in ((BOX_K2, (t1, t2)), (BOX_K3, (t1, t2, t3))):
        p_lim = joint_box_probability(box, q=4)
        hit = np.ones(len(t1), dtype=bool)
        for ell, t in enumerate(taus):
            hit &= (t > box[2 * ell]) & (t < box[2 * ell + 1])
        p_emp = float(np.mean(hit))
        se = math.sqrt(max(p_emp * (1 - p_emp), 1e-12) / len(t1))
        results.append((len(taus), p_lim, p_emp, se,
                        abs(p_emp - p_lim) <= 3 * se))
    passed = all(r[-1] for r in results)
    detail = "; ".join(
        f"k={k}: emp {pe:.4f} vs lim {pl:.4f} ({abs(pe-pl)/se:.2f} SE)"
        for k, pl, pe, se, _ in results)
    _announce(7, passed, detail)
    for k, p_lim, p_emp, se, ok in results:
        assert ok, f"k={k} box off by more than 3 binomial SEs"


def test_criterion_08_wishart_gap_law(wishart_run):
    ks = ks_test(SampleSet(wishart_run.tau_samples[1]), LimitLaw(q=3, k=1).cdf).statistic
    passed = ks <= 0.07
    _announce(8, passed, f"Wishart m=2n, n=200: KS = {ks:.4f} <= 0.07")
    assert ks <= 0.07


def test_criterion_09_gue_as_uue_gap_law(gue_run):
    ks = ks_test(SampleSet(gue_run.tau_samples[1]), LimitLaw(q=3, k=1).cdf).statistic
    passed = ks <= 0.07
    _announce(9, passed, f"GUE-as-UUE n=200 (semicircle scaling): KS = {ks:.4f} <= 0.07")
    assert ks <= 0.07


def test_criterion_10_count_poissonianity(ginibre_run_256):
    counts = ginibre_run_256.counts_for("cell")[:COUNT_PREFIX].astype(float)
    mu = poisson_intensity(IntensityQuery(
        EnsembleKind.GINIBRE, LengthSet.upto(COUNT_LENGTH),
        Disk(0j, COUNT_DISK_RADIUS)))
    fm = factorial_moment_test(counts, mu, k_max=3)
    disp = poisson_dispersion_test(counts, level=0.01)
    passed = bool(fm.passed and disp.passed)
    zs = ", ".join(f"k={k}: {row['z']:.2f} SE"
                   for k, row in fm.details["per_k"].items())
    _announce(10, passed,
              f"mu = {mu:.3f}, mean = {counts.mean():.4f}; moments within 3 SE "
              f"({zs}); dispersion = {disp.statistic / (len(counts) - 1):.4f} "
              f"(pass at 1%: {disp.passed})")
    assert fm.passed
    assert disp.passed


def test_criterion_11_iid_baseline():
    s = math.sqrt(2.0)
    cfg = ExperimentConfig(
        ensemble=EnsembleSpec(kind=EnsembleKind.IID_DISK, n=2000),
        trials=4000, master_seed=IID_SEED, k=1,
        count_regions=[CountRegion(id="a", lengths=LengthSet.upto(s),
                                   region=Disk(0j, 1.0))])
    run = run_experiment(cfg)
    counts = run.counts_for("a").astype(float)
    mu = poisson_intensity(IntensityQuery(
        EnsembleKind.IID_DISK, LengthSet.upto(s), Disk(0j, 1.0)))
    fm = factorial_moment_test(counts, mu, k_max=2)
    mu_ginibre = poisson_intensity(IntensityQuery(
        EnsembleKind.GINIBRE, LengthSet.upto(s), Disk(0j, 1.0)))
    passed = bool(fm.passed)
    zs = ", ".join(f"k={k}: {row['z']:.2f} SE"
                   for k, row in fm.details["per_k"].items())
    _announce(11, passed,
              f"i.i.d. mu = s^2/2 = {mu:.3f} ({zs}); contrast: Ginibre r^3 "
              f"intensity gives mu = s^4/4 = {mu_ginibre:.3f} on the same cell")
    assert fm.passed


def test_criterion_12_cluster_rarity():
    results = {}
    for n in (100, 200):
        quad = triple_cluster_expectation(
            CLUSTER_REGION, CLUSTER_COEFF, n,
            QuadratureSpec(scheme=Scheme.MONTE_CARLO,
                           samples=CLUSTER_QUAD_SAMPLES, seed=17))
        radius = CLUSTER_COEFF * float(n) ** -0.75
        counts = []
        for seed in range(CLUSTER_TRIALS):
            vals = eigvals_general(sample_ginibre(n, 90_000 + seed).matrix).values
            counts.append(triple_cluster_count(vals, radius,
                                               region=CLUSTER_REGION,
                                               half_disk=True))
        counts = np.asarray(counts, dtype=float)
        mc_mean = counts.mean()
        mc_se = counts.std(ddof=1) / math.sqrt(len(counts))
        combined = math.sqrt(mc_se**2 + quad.stderr**2)
        results[n] = (quad.value, mc_mean, combined,
                      abs(mc_mean - quad.value) <= 3 * combined)
    decreasing = (results[200][0] < results[100][0]
                  and results[200][1] < results[100][1])
    passed = results[100][3] and decreasing
    _announce(12, passed,
              f"n=100: quad {results[100][0]:.3f} vs MC {results[100][1]:.3f} "
              f"(z = {(results[100][1]-results[100][0])/results[100][2]:.2f}); "
              f"both decrease to n=200 ({results[200][0]:.3f}, {results[200][1]:.3f})")
    assert results[100][3]
    assert decreasing


def test_criterion_13_limit_law_normalization():
    from scipy.integrate import quad as squad

    worst_norm = 0.0
    worst_cons = 0.0
    for q in (3, 4):
        for k in range(1, 6):
            law = LimitLaw(q=q, k=k)
            total, _ = squad(law.density, 0, np.inf)
            worst_norm = max(worst_norm, abs(total - 1.0))
            for x in (0.3, 0.7, 1.1, 1.6):
                h = 1e-5
                deriv = (law.cdf(x + h) - law.cdf(x - h)) / (2 * h)
                worst_cons = max(worst_cons, abs(deriv - law.density(x)))
    passed = worst_norm < 1e-8 and worst_cons < 1e-6
    _announce(13, passed,
              f"density normalization error {worst_norm:.2e} < 1e-8; "
              f"CDF/density consistency {worst_cons:.2e} < 1e-6")
    assert worst_norm < 1e-8
    assert worst_cons < 1e-6
