"""Spectral statistics laboratory.

Builds symmetry-resolved spin-chain and random-matrix spectra, forms
order-q sum spectra, measures their spacing and ratio statistics against
the standard chaotic and Poisson references, scans for sum resonances,
evaluates equilibration moments with their fluctuation bounds, and
evaluates spectral form factor curves.  The `speclab` command line wires
these pieces into reproducible file-based pipelines.
"""

from .chain import ChainSpec, SectorBasis, build_hamiltonian, enumerate_sector_basis, momentum_sectors
from .equilibration import (
    DiagonalEnsemble,
    Observable,
    deviation_series,
    diagonal_ensemble,
    infinite_time_average,
    moment_bound_nonresonant,
    moment_bound_with_violations,
    mu_q_resonant_sum,
    mu_q_time_average,
    observable_norm,
    random_observable,
    random_state,
    variance_bound_basic,
    variance_bound_gap_degeneracy,
    variance_bound_with_violations,
)
from .formfactor import (CROSSOVER_FACTOR, FormFactorCurve, empirical_sff,
                         k2_analytic, k2_time_average, mu2_expectation_rmt)
from .qsum import (QSumSpectrum, build_qsum, combination_count,
                   qsum_index_tuples, sums_in_tuple_order, unrank_tuple)
from .resonance import (
    ViolationSet,
    ViolatorMultiplicity,
    exceptional_multiplicity,
    expected_exceptional,
    find_violations,
    monte_carlo_expected_exceptional,
    n_epsilon,
    pseudo_violation_count,
)
from .rmt import EnsembleSpec, ensemble_matrices, sample, semicircle_radius
from .spectral import (BULK_TRIM, Spectrum, UnfoldedSpectrum, UnfoldingConfig,
                       bulk_levels, bulk_slice, eigensystem, eigenvalues,
                       spacings, unfold)
from .stats import (
    GOE_MEAN_RATIO,
    POISSON_MEAN_RATIO,
    Histogram,
    RatioStatistics,
    bootstrap_mean_stderr,
    fraction_below,
    goe_ratio_cdf,
    goe_ratio_density,
    histogram,
    ks_distance,
    poisson_ratio_cdf,
    poisson_ratio_density,
    poisson_spacing,
    poisson_spacing_cdf,
    ratios,
    small_gap_probability,
    wigner_surmise,
    wigner_surmise_cdf,
)

__version__ = "0.1.0"

__all__ = [
    "ChainSpec", "SectorBasis", "build_hamiltonian", "enumerate_sector_basis",
    "momentum_sectors",
    "EnsembleSpec", "ensemble_matrices", "sample", "semicircle_radius",
    "Spectrum", "UnfoldedSpectrum", "UnfoldingConfig", "eigenvalues",
    "eigensystem", "unfold", "spacings", "bulk_levels", "bulk_slice",
    "BULK_TRIM",
    "QSumSpectrum", "build_qsum", "combination_count", "qsum_index_tuples",
    "sums_in_tuple_order",
    "unrank_tuple",
    "RatioStatistics", "ratios", "Histogram", "histogram", "ks_distance",
    "fraction_below", "bootstrap_mean_stderr", "wigner_surmise",
    "wigner_surmise_cdf",
    "poisson_spacing", "poisson_spacing_cdf", "goe_ratio_density",
    "goe_ratio_cdf", "poisson_ratio_density", "poisson_ratio_cdf",
    "small_gap_probability", "GOE_MEAN_RATIO", "POISSON_MEAN_RATIO",
    "ViolationSet", "ViolatorMultiplicity", "find_violations",
    "exceptional_multiplicity", "pseudo_violation_count", "n_epsilon",
    "expected_exceptional", "monte_carlo_expected_exceptional",
    "DiagonalEnsemble", "Observable", "diagonal_ensemble", "random_state",
    "random_observable", "observable_norm", "infinite_time_average",
    "deviation_series", "mu_q_time_average", "mu_q_resonant_sum",
    "variance_bound_basic", "moment_bound_nonresonant",
    "moment_bound_with_violations", "variance_bound_with_violations",
    "variance_bound_gap_degeneracy",
    "CROSSOVER_FACTOR", "FormFactorCurve", "k2_analytic", "k2_time_average", "empirical_sff",
    "mu2_expectation_rmt",
    "__version__",
]
