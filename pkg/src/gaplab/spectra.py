"""Eigenvalue and singular value extraction with explicit contracts.

LAPACK (via numpy.linalg) does the heavy lifting: Hessenberg reduction
plus shifted QR for general matrices, which is backward stable, so each
returned eigenvalue is exact for a perturbed matrix A + E with
||E|| = O(n ulp ||A||).  The `backward_error` field records the bound
certified by that guarantee; trace/determinant oracles in the test
suite check it independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class SpectrumKind(Enum):
    COMPLEX_PLANE = "complex_plane"
    REAL_LINE = "real_line"


class EigensolverError(RuntimeError):
    """QR iteration failed to converge; partial diagnostics attached.

    LAPACK caps the shifted-QR sweeps at 30 per eigenvalue and reports
    failure instead of looping, which surfaces here rather than passing
    silently.
    """

    def __init__(self, message: str, shape=None, norm=None):
        super().__init__(message)
        self.shape = shape
        self.norm = norm


@dataclass
class Spectrum:
    values: np.ndarray
    kind: SpectrumKind
    backward_error: float = 0.0

    @property
    def n(self) -> int:
        return len(self.values)

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.kind is SpectrumKind.REAL_LINE:
            self.values = np.real(self.values)


_EPS = np.finfo(float).eps

GENERAL_TOL_FACTOR = 100
HERMITIAN_TOL_FACTOR = 50
SYM_CHECK_ULPS = 10


def eigvals_general(a: np.ndarray) -> Spectrum:
    """All eigenvalues of a general complex matrix.

    Residual contract: for each returned lambda there is a unit vector v
    with ||A v - lambda v|| <= 100 n ulp ||A||_F.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag if np.iscomplexobj(a) else a.real)):
        raise ValueError("matrix entries must be finite")
    n = a.shape[0]
    norm = float(np.linalg.norm(a, "fro"))
    try:
        values = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:  # iteration cap exceeded inside LAPACK
        raise EigensolverError(
            f"QR iteration did not converge for {n}x{n} matrix: {exc}",
            shape=a.shape,
            norm=norm,
        ) from exc
    return Spectrum(values, SpectrumKind.COMPLEX_PLANE,
                    backward_error=GENERAL_TOL_FACTOR * n * _EPS * norm)


def eigvals_hermitian(h: np.ndarray) -> Spectrum:
    """Sorted real eigenvalues of a Hermitian matrix.

    Rejects inputs departing from H = H* by more than 10 ulp per entry.
    """
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError("matrix must be square")
    scale = np.maximum(np.abs(h), 1.0)
    if not np.all(np.abs(h - h.conj().T) <= SYM_CHECK_ULPS * _EPS * scale):
        raise ValueError("matrix is not Hermitian within 10 ulp per entry")
    n = h.shape[0]
    norm = float(np.linalg.norm(h, "fro"))
    try:
        values = np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(
            f"Hermitian eigensolver did not converge for {n}x{n} matrix: {exc}",
            shape=h.shape,
            norm=norm,
        ) from exc
    return Spectrum(values, SpectrumKind.REAL_LINE,
                    backward_error=HERMITIAN_TOL_FACTOR * n * _EPS * norm)


def singular_values(x: np.ndarray) -> Spectrum:
    """Singular values of an m x n factor (m >= n), descending."""
    x = np.asarray(x)
    if x.ndim != 2:
        raise ValueError("input must be a matrix")
    m, n = x.shape
    if m < n:
        raise ValueError("singular_values requires m >= n")
    norm = float(np.linalg.norm(x, "fro"))
    try:
        sigma = np.linalg.svd(x, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(
            f"SVD did not converge for {m}x{n} matrix: {exc}",
            shape=x.shape,
            norm=norm,
        ) from exc
    # descending by LAPACK convention; wishart_eigenvalues re-sorts ascending
    return Spectrum(sigma, SpectrumKind.REAL_LINE,
                    backward_error=HERMITIAN_TOL_FACTOR * max(m, n) * _EPS * norm)


def wishart_eigenvalues(factor: np.ndarray, m: int) -> Spectrum:
    """Eigenvalues of X*X/m from the factor X, via the SVD route.

    Never forms X*X: lambda_i = sigma_i^2 / m, returned ascending.
    """
    sv = singular_values(factor)
    lam = np.sort(sv.values**2 / m)
    return Spectrum(lam, SpectrumKind.REAL_LINE, backward_error=sv.backward_error)
