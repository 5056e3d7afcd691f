"""Determinantal correlation functions and their integrals.

rho_k is a k x k kernel determinant; the thinned-process correlations
follow by inclusion-exclusion over translated half-annuli, and the
triple-cluster expectation is the quadrature counterpart of the
Monte Carlo cluster count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .ensembles import EnsembleKind
from .kernels import ginibre_s_pairs, gue_kernel, wishart_kernel
from .quadrature import (
    MCEstimate,
    QuadratureSpec,
    Scheme,
    mc_mean,
    region_nodes_union,
    sample_half_disk,
)
from .regions import Disk, LengthSet, Rectangle
from .rng import RandomStream

NEGATIVE_DET_SLACK = 1e-10


class NumericalFailure(RuntimeError):
    """Kernel matrix determinant came out significantly negative."""


@dataclass(frozen=True)
class CorrelationRequest:
    ensemble: EnsembleKind
    points: tuple
    n: int
    m: int | None = None

    def __post_init__(self):
        if len(self.points) == 0:
            raise ValueError("points must be nonempty")
        if len(self.points) > self.n:
            raise ValueError("order k cannot exceed n")
        if self.ensemble is EnsembleKind.WISHART and self.m is None:
            raise ValueError("Wishart requests need m")


def _ginibre_rho_batch(points: np.ndarray, n: int) -> np.ndarray:
    """rho_k for stacked point tuples, shape (batch, k) -> (batch,).

    Builds the Hermitian matrix of weighted kernel entries
    S_n(z_i, z_j) and takes n^k pi^{-k} det; the Gaussian weights are
    absorbed into S_n, which keeps every entry in [-1, 1].
    """
    batch, k = points.shape
    mat = np.empty((batch, k, k), dtype=complex)
    for i in range(k):
        mat[:, i, i] = ginibre_s_pairs(points[:, i], points[:, i], n).real
        for j in range(i + 1, k):
            s = ginibre_s_pairs(points[:, i], points[:, j], n)
            mat[:, i, j] = s
            mat[:, j, i] = np.conj(s)
    det = np.linalg.det(mat).real
    return (float(n) / math.pi) ** k * det


def _real_kernel_matrix(points: np.ndarray, kind: EnsembleKind, n: int,
                        m: int | None) -> np.ndarray:
    k = len(points)
    mat = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            x, y = float(points[i].real), float(points[j].real)
            if kind is EnsembleKind.WISHART:
                val = wishart_kernel(x, y, m, n)
            else:
                val = gue_kernel(x, y, n)
            mat[i, j] = mat[j, i] = val
    return mat


def rho_k(request: CorrelationRequest) -> float:
    """k-point correlation function at the requested locations.

    Determinants in [-slack, 0) are clamped to 0 (repulsion makes exact
    zeros common in tests); anything more negative indicates a kernel
    evaluation bug and raises.
    """
    pts = np.asarray(request.points, dtype=complex)
    if request.ensemble is EnsembleKind.GINIBRE:
        value = float(_ginibre_rho_batch(pts[None, :], request.n)[0])
        diag = ginibre_s_pairs(pts, pts, request.n).real
        scale = (float(request.n) / math.pi) ** len(pts) * float(np.prod(np.abs(diag)))
    elif request.ensemble in (EnsembleKind.WISHART, EnsembleKind.GUE,
                              EnsembleKind.UUE):
        mat = _real_kernel_matrix(pts, request.ensemble, request.n, request.m)
        value = float(np.linalg.det(mat))
        scale = float(np.prod(np.abs(np.diag(mat))))
    else:
        raise ValueError(f"no correlation kernel for {request.ensemble}")
    if value < 0:
        if value < -NEGATIVE_DET_SLACK * max(scale, 1.0):
            raise NumericalFailure(
                f"kernel determinant {value:.3e} below the PSD slack")
        value = 0.0
    return value


@dataclass(frozen=True)
class PairDeterminantResult:
    exact: float
    leading: float

    @property
    def ratio(self) -> float:
        return self.exact / self.leading if self.leading != 0 else math.nan


def pair_determinant_limit(x: float, u: float, n: int,
                           ensemble: EnsembleKind,
                           m: int | None = None) -> PairDeterminantResult:
    """Exact 2x2 kernel determinant at (x, x+u) vs its leading term.

    Leading term: (pi^2/3) n^4 u^2 density(x)^4, valid for x in the bulk
    and u = O(n^{-4/3}).
    """
    from .kernels import marchenko_pastur_density, marchenko_pastur_edges, semicircle_density

    if ensemble is EnsembleKind.WISHART:
        if m is None:
            raise ValueError("Wishart needs m")
        dens = marchenko_pastur_density(m / n)
        a, b = marchenko_pastur_edges(m / n)
        kernel = lambda p, q: wishart_kernel(p, q, m, n)
    elif ensemble in (EnsembleKind.GUE, EnsembleKind.UUE):
        dens = semicircle_density()
        a, b = dens.support
        kernel = lambda p, q: gue_kernel(p, q, n)
    else:
        raise ValueError("pair determinant limit applies to real-line ensembles")
    if not a < x < b:
        raise ValueError("x must lie inside the bulk")
    y = x + u
    if u == 0:
        return PairDeterminantResult(exact=0.0, leading=0.0)
    kxx = kernel(x, x)
    kyy = kernel(y, y)
    kxy = kernel(x, y)
    exact = kxx * kyy - kxy * kxy
    leading = math.pi**2 / 3.0 * float(n) ** 4 * u * u * dens(x) ** 4
    return PairDeterminantResult(exact=exact, leading=leading)


def _rho3_ginibre(lam: np.ndarray, x1: np.ndarray, x2: np.ndarray,
                  n: int) -> np.ndarray:
    """Vectorized 3-point function from the 3x3 determinant."""
    d0 = ginibre_s_pairs(lam, lam, n).real
    d1 = ginibre_s_pairs(x1, x1, n).real
    d2 = ginibre_s_pairs(x2, x2, n).real
    s01 = ginibre_s_pairs(lam, x1, n)
    s02 = ginibre_s_pairs(lam, x2, n)
    s12 = ginibre_s_pairs(x1, x2, n)
    det = (d0 * d1 * d2
           + 2.0 * (s01 * s12 * np.conj(s02)).real
           - d0 * np.abs(s12) ** 2
           - d1 * np.abs(s02) ** 2
           - d2 * np.abs(s01) ** 2)
    return (float(n) / math.pi) ** 3 * det


def triple_cluster_expectation(region, c: float, n: int,
                               quad: QuadratureSpec | None = None,
                               half_disk: bool = True) -> MCEstimate:
    """Expected ordered triple count: bases in `region`, partners within
    c n^{-3/4} (in the lex-upper half disk by default).

    The 6-dimensional integral of rho_3 exceeds the tensor-rule budget,
    so this uses Monte Carlo with an explicit seed and returns a
    standard error.
    """
    if quad is None:
        quad = QuadratureSpec(scheme=Scheme.MONTE_CARLO)
    if quad.scheme is not Scheme.MONTE_CARLO:
        raise ValueError("triple_cluster_expectation integrates over 6 "
                         "dimensions; use the Monte Carlo scheme")
    if c <= 0:
        raise ValueError("radius coefficient must be positive")
    if not isinstance(region, (Disk, Rectangle)):
        raise ValueError("region must be a bounded disk or rectangle")
    if region.area == 0:
        return MCEstimate(0.0, 0.0, 0)
    c_n = c * float(n) ** -0.75
    stream = RandomStream(quad.seed)
    ns = quad.samples
    lam = region.sample(stream.uniforms(2 * ns))
    u1 = sample_half_disk(c_n, ns, stream.uniforms(2 * ns))
    u2 = sample_half_disk(c_n, ns, stream.uniforms(2 * ns))
    if not half_disk:
        flip = stream.uniforms(2 * ns)
        u1 = np.where(flip[:ns] < 0.5, u1, -u1)
        u2 = np.where(flip[ns:] < 0.5, u2, -u2)
    values = _rho3_ginibre(lam, lam + u1, lam + u2, n)
    piece = math.pi * c_n * c_n / 2.0 if half_disk else math.pi * c_n * c_n
    volume = region.area * piece * piece
    return mc_mean(values, volume)


@dataclass
class ThinnedEstimate:
    value: float                 # partial sum through m = M
    bracket: tuple               # (S_M, S_{M+1}) alternating-series envelope
    terms: list = field(default_factory=list)


def _bn_pieces(a_set: LengthSet, n: int) -> list:
    scale = float(n) ** -0.75
    return [(scale * lo, scale * hi) for lo, hi in a_set]


def thinned_correlation(points, n: int, a_set: LengthSet, truncation: int = 1,
                        quad: QuadratureSpec | None = None) -> ThinnedEstimate:
    """Correlation of the keep-exactly-one-neighbor process at `points`.

    Inclusion-exclusion: sum_m (-1)^m/m! int rho_{2k+m} over the
    translated half-annuli; truncated at m <= `truncation` with the
    next partial sum reported as the alternating-series envelope.
    Requires the translates lambda_i + B_n to be disjoint.
    """
    if quad is None:
        quad = QuadratureSpec()
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    pts = np.asarray(points, dtype=complex)
    k = len(pts)
    r_max = a_set.sup * float(n) ** -0.75
    for i in range(k):
        for j in range(i + 1, k):
            if abs(pts[i] - pts[j]) <= 2.0 * r_max:
                raise ValueError(
                    "translated neighborhoods overlap; the inclusion-"
                    "exclusion domain is only defined for disjoint "
                    "translates")
    if 2 * k + truncation + 1 > n:
        raise ValueError("correlation order 2k+m exceeds n")
    if 2 * k + truncation + 1 > 64:
        raise ValueError("truncation exceeds the numeric budget (order > 64)")

    pieces = _bn_pieces(a_set, n)
    x_nodes, x_weights = region_nodes_union(pieces, quad.nodes)
    union_nodes = np.concatenate([pts[i] + x_nodes for i in range(k)])
    union_weights = np.tile(x_weights, k)

    terms = []
    for m_order in range(truncation + 2):
        dim = 2 * k + 2 * m_order
        if quad.scheme is Scheme.TENSOR_GAUSS_LEGENDRE and dim <= 4:
            term = _thinned_term_tensor(pts, n, x_nodes, x_weights,
                                        union_nodes, union_weights, m_order)
        else:
            term = _thinned_term_mc(pts, n, pieces, m_order,
                                    quad.samples, quad.seed + m_order)
        terms.append(((-1) ** m_order / math.factorial(m_order)) * term)
    partial = np.cumsum(terms)
    value = float(partial[truncation])
    bracket = (value, float(partial[truncation + 1]))
    return ThinnedEstimate(value=value, bracket=bracket, terms=list(terms))


def _stack_rho(pts: np.ndarray, xs: list, ys: list, n: int) -> np.ndarray:
    """rho_{2k+m}(l_1, x_1, ..., l_k, x_k, y_1, ..., y_m) batched."""
    batch = xs[0].shape[0]
    cols = []
    for i, x in enumerate(xs):
        cols.append(np.full(batch, pts[i]))
        cols.append(x)
    cols.extend(ys)
    stacked = np.stack(cols, axis=1)
    return _ginibre_rho_batch(stacked, n)


def _thinned_term_tensor(pts, n, x_nodes, x_weights, union_nodes,
                         union_weights, m_order) -> float:
    k = len(pts)
    grids = [x_nodes + pts[i] for i in range(k)]
    weight_grids = [x_weights] * k
    node_sets = grids + [union_nodes] * m_order
    weight_sets = weight_grids + [union_weights] * m_order
    mesh = np.meshgrid(*node_sets, indexing="ij")
    wmesh = np.meshgrid(*weight_sets, indexing="ij")
    flat = [g.ravel() for g in mesh]
    weights = np.ones_like(flat[0].real)
    for w in wmesh:
        weights = weights * w.ravel().real
    xs = flat[:k]
    ys = flat[k:]
    values = _stack_rho(pts, xs, ys, n)
    return float(np.sum(weights * values))


def _thinned_term_mc(pts, n, pieces, m_order, samples, seed) -> float:
    from .quadrature import sample_half_annulus

    k = len(pts)
    stream = RandomStream(seed)
    areas = np.array([math.pi / 2.0 * (hi**2 - lo**2) for lo, hi in pieces])
    total_area = float(np.sum(areas))

    def draw(count):
        # mixture over half-annulus pieces proportional to area
        pick = stream.uniforms(count)
        cum = np.cumsum(areas) / total_area
        idx = np.searchsorted(cum, pick)
        out = np.empty(count, dtype=complex)
        for piece_i, (lo, hi) in enumerate(pieces):
            take = idx == piece_i
            cnt = int(np.count_nonzero(take))
            if cnt:
                out[take] = sample_half_annulus(lo, hi, cnt,
                                                stream.uniforms(2 * cnt))
        return out

    xs = [pts[i] + draw(samples) for i in range(k)]
    ys = []
    for _ in range(m_order):
        base = np.asarray(pts)[
            np.minimum((stream.uniforms(samples) * k).astype(int), k - 1)]
        ys.append(base + draw(samples))
    values = _stack_rho(pts, xs, ys, n)
    volume = (total_area**k) * ((k * total_area) ** m_order)
    return float(np.mean(values) * volume)


def fischer_check(mat: np.ndarray, omega) -> bool:
    """det(M) <= det(M_w) det(M_w-complement) within 1e-10 relative slack.

    Requires a Hermitian PSD input; raises otherwise.
    """
    mat = np.asarray(mat)
    k = mat.shape[0]
    if mat.shape != (k, k) or not np.allclose(mat, mat.conj().T, atol=1e-12):
        raise ValueError("matrix must be Hermitian")
    eigs = np.linalg.eigvalsh(mat)
    if eigs[0] < -1e-10 * max(abs(eigs[-1]), 1.0):
        raise ValueError("matrix must be positive semidefinite")
    omega = sorted(set(int(i) for i in omega))
    if any(i < 0 or i >= k for i in omega):
        raise ValueError("omega indices out of range")
    comp = [i for i in range(k) if i not in omega]

    def _det(idx):
        if not idx:
            return 1.0
        return float(np.linalg.det(mat[np.ix_(idx, idx)]).real)

    lhs = _det(list(range(k)))
    rhs = _det(omega) * _det(comp)
    return lhs <= rhs + NEGATIVE_DET_SLACK * max(abs(rhs), 1.0)
