"""gaplab: smallest eigenvalue gaps of random matrices.

Ensemble sampling, gap extraction, determinantal kernel evaluation, and
statistical verification of the Poissonian limit laws for the Ginibre,
Wishart, and unitary-invariant ensembles.
"""

from .correlations import (
    CorrelationRequest,
    NumericalFailure,
    PairDeterminantResult,
    ThinnedEstimate,
    fischer_check,
    pair_determinant_limit,
    rho_k,
    thinned_correlation,
    triple_cluster_expectation,
)
from .ensembles import (
    EnsembleKind,
    EnsembleSpec,
    McmcParams,
    SampleOutput,
    sample,
    sample_ginibre,
    sample_gue,
    sample_iid_disk,
    sample_uue_chain,
    sample_uue_eigenvalues,
    sample_wishart_factor,
)
from .experiment import (
    ConfigError,
    CountRegion,
    ExperimentConfig,
    ExperimentRun,
    report,
    run_experiment,
    verify_kernels,
)
from .gaps import (
    GapMode,
    GapRecord,
    GapStatistics,
    consecutive_gaps,
    count_in_region,
    ginibre_scaling,
    iid_disk_scaling,
    k_smallest_gaps,
    lex_less,
    real_ensemble_scaling,
    rescale_gaps,
    successor_gaps,
    triple_cluster_count,
)
from .kernels import (
    AngleParams,
    AsymptoticKernel,
    DensityFn,
    DensityKind,
    KernelValue,
    LogComplex,
    RegimeReport,
    check_remainder_regimes,
    ginibre_kernel_scaled,
    ginibre_remainder,
    ginibre_s_pairs,
    gue_kernel,
    laguerre_wave,
    marchenko_pastur_density,
    quadratic_equilibrium_density,
    semicircle_density,
    sine_kernel,
    spectral_density,
    user_density,
    wishart_kernel,
    wishart_kernel_asymptotic,
)
from .laws import (
    IntensityQuery,
    LimitLaw,
    joint_box_probability,
    kth_gap_cdf,
    poisson_intensity,
)
from .quadrature import MCEstimate, QuadratureSpec, Scheme
from .regions import Disk, LengthSet, RealInterval, Rectangle, WholePlane
from .rng import RandomStream, derive_seed, splitmix64
from .spectra import (
    EigensolverError,
    Spectrum,
    SpectrumKind,
    eigvals_general,
    eigvals_hermitian,
    singular_values,
    wishart_eigenvalues,
)
from .stats import (
    SampleSet,
    TestReport,
    factorial_moment_test,
    ks_test,
    poisson_dispersion_test,
)

__version__ = "0.1.0"
