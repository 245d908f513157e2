"""Spectral differentiation matrices and Chebyshev grids."""

from __future__ import annotations

import math
from typing import Sequence

from .errors import ArgumentError
from .fornberg import fornberg_weights
from .mlagrange import _check_order, all_weights_mlagrange
from .numkernel import _is_power_of_two, ordering_permutation
from .partial import FDWeights, rescale_weights
from .tables import DiffMatrix, as_grid, to_array

ALGORITHMS = ("partial", "mlagrange", "fornberg")

__all__ = [
    "ALGORITHMS",
    "chebyshev_grid",
    "chebyshev_diff_matrix",
    "default_ordering",
    "diff_matrix",
    "rescale_weights",
]


def chebyshev_grid(N: int, ordering: str = "natural") -> tuple:
    """Chebyshev extreme points ``cos((k-1) pi / (N-1))``, ``k = 1..N``.

    Evaluated as ``sin(pi (N - 2k + 1) / (2 (N - 1)))`` so the grid is exactly
    antisymmetric about 0.
    """
    if N < 2:
        raise ArgumentError(f"Chebyshev grid needs N >= 2, got {N}")
    z = tuple(math.sin(math.pi * (N - 2 * k + 1) / (2 * (N - 1))) for k in range(1, N + 1))
    perm = ordering_permutation(z, ordering)
    return tuple(z[i] for i in perm)


def default_ordering(N: int) -> str:
    return "bit_reversed" if _is_power_of_two(N) else "leja"


def _rows_partial(z, M):
    fd = FDWeights(z, M)
    rows = []
    for i in range(len(z)):
        fd.set_center_node(i)
        rows.append([fd(j) for j in range(len(z))])
    return rows


def _rows_independent(z, M, weights):
    return [list(weights(z, M, zi).order(M)) for zi in z]


def diff_matrix(grid: Sequence, M: int, algorithm: str = "partial", ordering: str = "natural") -> DiffMatrix:
    """Order-``M`` differentiation matrix on ``grid``.

    Row ``i`` holds the weights for the ``M``-th derivative at ``grid[i]``.
    ``ordering`` only changes the order in which nodes enter the computation;
    the matrix is always returned in the caller's node order. With
    ``algorithm="partial"`` a single :class:`FDWeights` is re-centred for every
    row, so the Lagrange weights are computed once.
    """
    z = as_grid(grid)
    N = len(z)
    _check_order(M, N)
    perm = ordering_permutation(z, ordering)
    zp = [z[i] for i in perm]
    if algorithm == "partial":
        rows = _rows_partial(zp, M)
    elif algorithm == "mlagrange":
        rows = _rows_independent(zp, M, all_weights_mlagrange)
    elif algorithm == "fornberg":
        rows = _rows_independent(zp, M, fornberg_weights)
    else:
        raise ArgumentError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    # rows/cols are in permuted order: entry [a][b] couples z[perm[a]] to z[perm[b]]
    out = [[None] * N for _ in range(N)]
    for a, pa in enumerate(perm):
        for b, pb in enumerate(perm):
            out[pa][pb] = rows[a][b]
    meta = {"algorithm": algorithm, "ordering": ordering, "fallback": getattr(perm, "fallback", False)}
    return DiffMatrix(z, M, to_array(out), meta)


def chebyshev_diff_matrix(
    N: int,
    M: int,
    algorithm: str = "partial",
    ordering: str | None = None,
    dilation: float = 2.0,
) -> DiffMatrix:
    """Chebyshev differentiation matrix in natural node order.

    The grid is dilated by ``dilation`` (2 puts the logarithmic capacity at 1
    and keeps Lagrange weights away from underflow), the matrix is computed
    in ``ordering`` (bit reversal for powers of two, Leja otherwise) and then
    scaled back by ``dilation**M``.
    """
    z = chebyshev_grid(N)
    if ordering is None:
        ordering = default_ordering(N)
    D = diff_matrix([dilation * x for x in z], M, algorithm, ordering)
    entries = D.entries * dilation**M
    meta = dict(D.meta, dilation=dilation)
    return DiffMatrix(z, M, entries, meta)
