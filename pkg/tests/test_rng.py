import numpy as np
import pytest

from gaplab.rng import RandomStream, derive_seed, splitmix64


def test_bit_identical_streams():
    a = RandomStream(123).gaussians(1000)
    b = RandomStream(123).gaussians(1000)
    assert np.array_equal(a, b)


def test_different_seeds_differ():
    a = RandomStream(1).uniforms(100)
    b = RandomStream(2).uniforms(100)
    assert not np.array_equal(a, b)


def test_uniform_ranges():
    u = RandomStream(5).uniforms(10000)
    assert np.all((u >= 0) & (u < 1))
    uo = RandomStream(5).uniforms_open(10000)
    assert np.all((uo > 0) & (uo <= 1))


def test_gaussian_moments():
    g = RandomStream(99).gaussians(200000)
    assert abs(np.mean(g)) < 5 / np.sqrt(len(g))
    assert abs(np.var(g) - 1.0) < 5 * np.sqrt(2.0 / len(g))


def test_complex_gaussian_variance():
    z = RandomStream(7).complex_gaussians(100000)
    # E|z|^2 = 1 with independent re/im of variance 1/2
    assert abs(np.mean(np.abs(z) ** 2) - 1.0) < 0.02
    assert abs(np.var(z.real) - 0.5) < 0.01
    assert abs(np.var(z.imag) - 0.5) < 0.01


def test_box_muller_pair_layout():
    # first pair comes from the first two raw words, documented transform
    stream = RandomStream(2024)
    raw = RandomStream(2024).raw(2)
    u1 = ((raw[0] >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53
    u2 = (raw[1] >> np.uint64(11)).astype(np.float64) * 2.0**-53
    expect0 = np.sqrt(-2 * np.log(u1)) * np.cos(2 * np.pi * u2)
    got = stream.gaussians(1)
    assert got[0] == expect0


def test_splitmix64_known_vector():
    # canonical first output of splitmix64 seeded with 0 (state advanced
    # by the golden gamma, then finished)
    golden = 0x9E3779B97F4A7C15
    assert splitmix64(golden) == 0xE220A8397B1DCDAF


def test_derive_seed_distinct_and_deterministic():
    seeds = {derive_seed(42, i) for i in range(1000)}
    assert len(seeds) == 1000
    assert derive_seed(42, 7) == derive_seed(42, 7)
    with pytest.raises(ValueError):
        derive_seed(1, -1)
