"""Finite difference weights on arbitrary grids, spectral differentiation
matrices, and order-of-accuracy analysis."""

from .errors import (
    ArgumentError,
    DegenerateConstant,
    DuplicateGridPoint,
    FdkitError,
    ZeroRootError,
)
from .fornberg import fornberg_weights
from .mlagrange import all_weights_mlagrange, find_C, find_ckm, scale_weights
from .numkernel import (
    coeffs_via_newton_identities,
    convolve_trunc,
    elementary_symmetric,
    lagrange_weights,
    multbinom,
    order_bit_reversed,
    order_leja,
    poly_from_roots,
)
from .partial import FDWeights, all_weights_partial, rescale_weights
from .spectral import chebyshev_diff_matrix, chebyshev_grid, diff_matrix
from .superconv import AccuracyReport, analyze, detect_boost, moment_residuals
from .tables import DiffMatrix, WeightTable

WEIGHT_ALGORITHMS = {
    "partial": all_weights_partial,
    "mlagrange": all_weights_mlagrange,
    "fornberg": fornberg_weights,
}


def weights(grid, M, center=0, algorithm="partial"):
    """Weight table for derivatives ``0..M`` at ``center`` using the named algorithm."""
    try:
        fn = WEIGHT_ALGORITHMS[algorithm]
    except KeyError:
        raise ArgumentError(f"unknown algorithm {algorithm!r}") from None
    return fn(grid, M, center)


__version__ = "0.1.0"
