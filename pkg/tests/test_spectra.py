import numpy as np
import pytest

from gaplab.ensembles import sample_ginibre, sample_gue, sample_wishart_factor
from gaplab.spectra import (
    Spectrum,
    SpectrumKind,
    eigvals_general,
    eigvals_hermitian,
    singular_values,
    wishart_eigenvalues,
)


def test_general_triangular():
    spec = eigvals_general(np.diag([1.0, 2.0j, -3.0]))
    got = sorted(spec.values, key=lambda z: (z.real, z.imag))
    want = sorted([1.0, 2.0j, -3.0], key=lambda z: (z.real, z.imag))
    assert np.allclose(got, want, atol=1e-14)
    assert spec.kind is SpectrumKind.COMPLEX_PLANE


def test_general_companion_matrix():
    # companion matrix of z^2 - 1 has roots +-1
    comp = np.array([[0.0, 1.0], [1.0, 0.0]])
    vals = np.sort_complex(eigvals_general(comp).values)
    assert np.allclose(vals, [-1.0, 1.0], atol=1e-12)


def test_general_trace_identity():
    a = sample_ginibre(50, seed=3).matrix
    spec = eigvals_general(a)
    tol = 100 * 50 * np.finfo(float).eps * np.linalg.norm(a, "fro")
    assert abs(np.sum(spec.values) - np.trace(a)) <= tol
    assert spec.backward_error <= tol + 1e-300


def test_general_rejects_nonfinite_and_nonsquare():
    with pytest.raises(ValueError):
        eigvals_general(np.array([[np.nan, 0], [0, 1]]))
    with pytest.raises(ValueError):
        eigvals_general(np.zeros((2, 3)))


def test_hermitian_sorted_examples():
    assert np.allclose(eigvals_hermitian(np.diag([3.0, 1.0, 2.0])).values,
                       [1.0, 2.0, 3.0])
    assert np.allclose(eigvals_hermitian(np.array([[0.0, 1.0], [1.0, 0.0]])).values,
                       [-1.0, 1.0])


def test_hermitian_rejects_asymmetric():
    with pytest.raises(ValueError):
        eigvals_hermitian(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_hermitian_trace_identity():
    h = sample_gue(100, seed=11).matrix
    spec = eigvals_hermitian(h)
    assert spec.kind is SpectrumKind.REAL_LINE
    assert np.all(np.diff(spec.values) >= 0)
    assert abs(np.sum(spec.values) - np.trace(h).real) <= 1e-10 * np.linalg.norm(h, "fro") * 100


def test_unitary_similarity_invariance():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(20, 20)) + 1j * rng.normal(size=(20, 20))
    q, _ = np.linalg.qr(rng.normal(size=(20, 20)) + 1j * rng.normal(size=(20, 20)))
    v1 = np.sort_complex(eigvals_general(a).values)
    v2 = np.sort_complex(eigvals_general(q @ a @ q.conj().T).values)
    assert np.allclose(v1, v2, atol=1e-10)


def test_determinant_identity_small():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(6, 6))
    vals = eigvals_general(a).values
    assert np.prod(np.abs(vals)) == pytest.approx(abs(np.linalg.det(a)), rel=1e-10)


def test_singular_values_examples():
    assert np.allclose(singular_values(np.eye(4)).values, np.ones(4))
    x = np.array([[3.0, 0.0], [0.0, 4.0], [0.0, 0.0]])
    assert np.allclose(singular_values(x).values, [4.0, 3.0])
    with pytest.raises(ValueError):
        singular_values(np.zeros((2, 3)))


def test_wishart_route_matches_hermitian_solver():
    m, n = 40, 20
    x = sample_wishart_factor(m, n, seed=5).matrix
    lam = wishart_eigenvalues(x, m).values
    her = eigvals_hermitian(x.conj().T @ x).values / m
    assert np.allclose(lam, her, rtol=1e-10)
    assert np.all(np.diff(lam) >= 0)


def test_square_wishart_nonnegative():
    x = sample_wishart_factor(15, 15, seed=9).matrix
    lam = wishart_eigenvalues(x, 15).values
    assert np.all(lam >= 0)
