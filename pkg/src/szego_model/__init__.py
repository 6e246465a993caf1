"""Compressions of Toeplitz operators to model spaces K_(B^n) of finite Blaschke
products, and numerical checks of their Szego-type spectral distribution."""

from .blaschke import (
    BlaschkeProduct,
    boundary_phase,
    compose_moebius,
    delta,
    derivative_on_circle,
    evaluate,
    moebius,
    winding_number,
)
from .circle_quadrature import (
    CircleGrid,
    GridFunction,
    GridMismatchError,
    default_grid_size,
    fourier_coefficients,
    inner_product,
    integrate_mean,
)
from .compression import (
    BlockDeviation,
    ClassicalToeplitz,
    CompressedMatrix,
    block_deviation,
    classical_toeplitz,
    compress_analytic,
    compress_quadrature,
    lemma7_entry,
)
from .malmquist import (
    BasisIndex,
    MalmquistBasis,
    basis_element,
    build_basis,
    gram_matrix,
    kernel_sample,
)
from .spectral import (
    DistributionReport,
    Hat,
    NotHermitianError,
    ReportRow,
    SpectrumResult,
    default_family,
    empirical_average,
    gaps_nonincreasing,
    hat_family,
    hermitian_eigenvalues,
    jacobi_eigh,
    limit_function,
    limit_integral,
    singular_values,
    szego_experiment,
)
from .symbol import (
    FourierSymbol,
    M1Symbol,
    NormBounds,
    SampledSymbol,
    change_of_variables_check,
    gamma_inverse_single_zero,
    gamma_map,
    gram_of_powers,
    norm_bounds_check,
    real_valued,
)

__version__ = "0.1.0"

__all__ = [
    "basis_element",
    "BasisIndex",
    "BlaschkeProduct",
    "block_deviation",
    "BlockDeviation",
    "boundary_phase",
    "build_basis",
    "change_of_variables_check",
    "CircleGrid",
    "classical_toeplitz",
    "ClassicalToeplitz",
    "compose_moebius",
    "compress_analytic",
    "compress_quadrature",
    "CompressedMatrix",
    "default_family",
    "default_grid_size",
    "delta",
    "derivative_on_circle",
    "DistributionReport",
    "empirical_average",
    "evaluate",
    "fourier_coefficients",
    "FourierSymbol",
    "gamma_inverse_single_zero",
    "gamma_map",
    "gaps_nonincreasing",
    "gram_matrix",
    "gram_of_powers",
    "GridFunction",
    "GridMismatchError",
    "Hat",
    "hat_family",
    "hermitian_eigenvalues",
    "inner_product",
    "integrate_mean",
    "jacobi_eigh",
    "kernel_sample",
    "lemma7_entry",
    "limit_function",
    "limit_integral",
    "M1Symbol",
    "MalmquistBasis",
    "moebius",
    "norm_bounds_check",
    "NormBounds",
    "NotHermitianError",
    "real_valued",
    "ReportRow",
    "SampledSymbol",
    "singular_values",
    "SpectrumResult",
    "szego_experiment",
    "winding_number",
]
