"""Higher-order spacing ratio statistics and symmetry-sector deduction."""

from ._core import (
    HosrError,
    RatioSeries,
    Spectrum,
    TheoryDist,
    __version__,
    bessel_zero,
    circular_billiard_levels,
    d_statistic,
    gamma_spacing_pdf,
    infer_sectors,
    ks_test,
    make_spectrum,
    missing_levels_experiment,
    normalization_constant,
    parse_level_file,
    poisson_hosr_pdf,
    sample_composite,
    sample_goe_dense,
    sample_goe_tridiagonal,
    sample_poisson_levels,
    scan_beta,
    spacing_ratios,
    spin_chain_spectrum,
    superpose,
    collapse_degeneracies,
    wigner_ratio_pdf,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
