"""Samplers for the five matrix/point ensembles.

Conventions
-----------
Ginibre: A = X/sqrt(n), entries of X standard complex Gaussian
    (u + iv)/sqrt(2); eigenvalue cloud fills the unit disk.
Wishart: the rectangular m x n factor X is returned, not X*X/m, so the
    spectrum comes from the numerically superior singular-value route.
GUE: Hermitian with density exp(-(n/2) tr H^2), i.e. N(0, 1/n) diagonal
    and off-diagonal total variance 1/n.  This puts the limiting
    spectrum on [-2, 2] with semicircle density sqrt(4 - x^2)/(2 pi),
    the verification target used throughout; it is the unitary-invariant
    ensemble with quadratic potential x^2/2.
UUE: eigenvalues sampled directly by Metropolis-Hastings on the log-gas
    density 2 sum log|l_i - l_j| - n sum V(l_j); single-coordinate
    Gaussian proposals at the inter-particle scale.
IidDisk: i.i.d. uniform points on the closed unit disk, inverse-CDF
    radius r = sqrt(u).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .rng import RandomStream


class EnsembleKind(Enum):
    GINIBRE = "ginibre"
    WISHART = "wishart"
    GUE = "gue"
    UUE = "uue"
    IID_DISK = "iid_disk"


@dataclass(frozen=True)
class McmcParams:
    step_scale: float | None = None   # default 0.5 n^{-1/2} if None
    burn_in: int = 2000               # sweeps
    thinning: int = 50                # sweeps between retained draws

    def __post_init__(self):
        if self.step_scale is not None and self.step_scale <= 0:
            raise ValueError("proposal scale must be positive")
        if self.burn_in < 0:
            raise ValueError("burn-in must be nonnegative")
        if self.thinning < 1:
            raise ValueError("thinning interval must be >= 1")


@dataclass(frozen=True)
class EnsembleSpec:
    kind: EnsembleKind
    n: int
    m: int | None = None                       # Wishart only
    potential: tuple | None = None             # UUE only, ascending coeffs of V
    mcmc: McmcParams = field(default_factory=McmcParams)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.kind is EnsembleKind.WISHART:
            if self.m is None or self.m < self.n:
                raise ValueError("Wishart requires m >= n")
        if self.kind is EnsembleKind.UUE:
            if self.potential is None:
                raise ValueError("UUE requires a potential")
            _validate_potential(self.potential)

    @property
    def beta(self) -> float:
        if self.kind is not EnsembleKind.WISHART:
            raise ValueError("beta is defined for Wishart only")
        return self.m / self.n


def _validate_potential(coeffs) -> None:
    coeffs = tuple(float(c) for c in coeffs)
    if len(coeffs) < 3 or len(coeffs) % 2 == 0:
        raise ValueError("potential must be an even polynomial (odd length coeffs)")
    if any(c != 0.0 for c in coeffs[1::2]):
        raise ValueError("potential must be even: odd coefficients must vanish")
    if coeffs[-1] <= 0:
        raise ValueError("potential needs a positive leading coefficient")


@dataclass
class SampleOutput:
    seed: int
    matrix: np.ndarray | None = None
    spectrum: np.ndarray | None = None
    acceptance_rate: float | None = None  # UUE chains only
    warning: str | None = None


def sample_ginibre(n: int, seed: int) -> SampleOutput:
    """Draw A = X/sqrt(n) with i.i.d. standard complex Gaussian X."""
    if n < 2:
        raise ValueError("n must be >= 2")
    stream = RandomStream(seed)
    x = stream.complex_gaussians(n * n).reshape(n, n)
    return SampleOutput(seed=seed, matrix=x / math.sqrt(n))


def sample_wishart_factor(m: int, n: int, seed: int) -> SampleOutput:
    """Rectangular Gaussian factor X (m x n); spectrum is sv(X)^2/m."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if m < n:
        raise ValueError("m >= n required")
    stream = RandomStream(seed)
    x = stream.complex_gaussians(m * n).reshape(m, n)
    return SampleOutput(seed=seed, matrix=x)


def sample_gue(n: int, seed: int) -> SampleOutput:
    """Hermitian draw from exp(-(n/2) tr H^2); H = H* holds bitwise."""
    if n < 2:
        raise ValueError("n must be >= 2")
    stream = RandomStream(seed)
    diag = stream.gaussians(n) / math.sqrt(n)
    k = n * (n - 1) // 2
    off = stream.complex_gaussians(k) / math.sqrt(n)  # E|h_ij|^2 = 1/n
    h = np.zeros((n, n), dtype=complex)
    iu = np.triu_indices(n, k=1)
    h[iu] = off
    h += h.conj().T
    h[np.diag_indices(n)] = diag
    return SampleOutput(seed=seed, matrix=h)


def sample_iid_disk(n: int, seed: int) -> SampleOutput:
    """n i.i.d. points uniform on the closed unit disk."""
    if n < 2:
        raise ValueError("n must be >= 2")
    stream = RandomStream(seed)
    u = stream.uniforms(2 * n)
    r = np.sqrt(u[0::2])
    theta = 2.0 * np.pi * u[1::2]
    return SampleOutput(seed=seed, spectrum=r * np.exp(1j * theta))


def potential_values(coeffs, x: np.ndarray) -> np.ndarray:
    return np.polynomial.polynomial.polyval(x, np.asarray(coeffs, dtype=float))


class _LogGasChain:
    """Metropolis-Hastings walker on the eigenvalue log-gas density."""

    def __init__(self, spec: EnsembleSpec, seed: int):
        self.spec = spec
        self.n = spec.n
        self.coeffs = np.asarray(spec.potential, dtype=float)
        self.scale = spec.mcmc.step_scale or 0.5 / math.sqrt(self.n)
        self.stream = RandomStream(seed)
        # deterministic overdispersed start: equally spaced on a potential-
        # agnostic interval, then relaxed by burn-in
        self.state = np.linspace(-1.0, 1.0, self.n)
        self.accepted = 0
        self.proposed = 0

    def _delta_log_density(self, i: int, new: float) -> float:
        lam = self.state
        old = lam[i]
        others = np.delete(lam, i)
        d_new = np.abs(others - new)
        if np.any(d_new == 0.0):
            return -math.inf  # Vandermonde zero, always rejected
        d_old = np.abs(others - old)
        log_inter = 2.0 * (np.sum(np.log(d_new)) - np.sum(np.log(d_old)))
        v_new = potential_values(self.coeffs, np.array([new]))[0]
        v_old = potential_values(self.coeffs, np.array([old]))[0]
        return log_inter - self.n * (v_new - v_old)

    def sweep(self, count: int = 1, track: bool = False) -> None:
        for _ in range(count):
            steps = self.stream.gaussians(self.n) * self.scale
            log_u = np.log(self.stream.uniforms_open(self.n))
            for i in range(self.n):
                new = self.state[i] + steps[i]
                if log_u[i] < self._delta_log_density(i, new):
                    self.state[i] = new
                    if track:
                        self.accepted += 1
            if track:
                self.proposed += self.n

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.proposed if self.proposed else float("nan")


def sample_uue_eigenvalues(spec: EnsembleSpec, seed: int) -> SampleOutput:
    """One spectrum draw from the UUE log-gas chain (burn-in + thinning)."""
    if spec.kind is not EnsembleKind.UUE:
        raise ValueError("spec.kind must be UUE")
    chain = _LogGasChain(spec, seed)
    chain.sweep(spec.mcmc.burn_in)
    chain.sweep(spec.mcmc.thinning, track=True)
    rate = chain.acceptance_rate
    warning = None
    if not 0.1 <= rate <= 0.7:
        warning = f"acceptance rate {rate:.3f} outside [0.1, 0.7]"
    return SampleOutput(seed=seed, spectrum=np.sort(chain.state),
                        acceptance_rate=rate, warning=warning)


def sample_uue_chain(spec: EnsembleSpec, seed: int, draws: int) -> list[SampleOutput]:
    """Multiple thinned draws from a single chain (amortizes burn-in)."""
    if spec.kind is not EnsembleKind.UUE:
        raise ValueError("spec.kind must be UUE")
    if draws < 1:
        raise ValueError("draws must be >= 1")
    chain = _LogGasChain(spec, seed)
    chain.sweep(spec.mcmc.burn_in)
    out = []
    for _ in range(draws):
        chain.sweep(spec.mcmc.thinning, track=True)
        rate = chain.acceptance_rate
        warning = None
        if not 0.1 <= rate <= 0.7:
            warning = f"acceptance rate {rate:.3f} outside [0.1, 0.7]"
        out.append(SampleOutput(seed=seed, spectrum=np.sort(chain.state.copy()),
                                acceptance_rate=rate, warning=warning))
    return out


def sample(spec: EnsembleSpec, seed: int) -> SampleOutput:
    """Dispatch on the ensemble kind."""
    if spec.kind is EnsembleKind.GINIBRE:
        return sample_ginibre(spec.n, seed)
    if spec.kind is EnsembleKind.WISHART:
        return sample_wishart_factor(spec.m, spec.n, seed)
    if spec.kind is EnsembleKind.GUE:
        return sample_gue(spec.n, seed)
    if spec.kind is EnsembleKind.UUE:
        return sample_uue_eigenvalues(spec, seed)
    if spec.kind is EnsembleKind.IID_DISK:
        return sample_iid_disk(spec.n, seed)
    raise ValueError(f"unknown ensemble kind {spec.kind}")
