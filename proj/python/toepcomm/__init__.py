"""Analytic Toeplitz symbol laboratory.

Winding geometry on image curves, power-series factorizations, truncated
Hardy-space operator algebra, and MCP/DCP classification of analytic
Toeplitz operators, backed by the C++ core.
"""

import json as _json

from ._core import (  # noqa: F401
    TaylorSymbol,
    BlaschkeProduct,
    parse_check,
    lower,
    blaschke_to_taylor,
    winding_number,
    valence,
    winding_profile,
    minimal_winding_of,
    jordan_crossings,
    univalence,
    single_cover,
    support_gcd,
    bdu_factor,
    bdu_crosscheck,
    tc_inner_part,
    fit_through_blaschke,
    toeplitz_matrix,
    adjoint_eigen_residual,
    commutant_dims,
    density_witness,
    deddens_wong_residual,
    fejer_polynomial,
    fejer_wot_gap,
    fejer_supnorm_check,
    wold_components,
    wold_projection_matrix,
    dilation_matrix,
    malmquist_basis,
    model_expand,
    explain_verdict,
    winding_plot_svg,
    example_dsl,
    example_names,
    _classify_json,
)

__version__ = "0.1.0"


def classify(symbol, order=256, nodes=4096, grid=16, depth=6):
    """Classify a symbol (DSL text or TaylorSymbol); returns the verdict
    as a dict with rule-by-rule evidence."""
    return _json.loads(_classify_json(symbol, order, nodes, grid, depth))
