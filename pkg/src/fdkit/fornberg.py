"""Fornberg's recurrences, kept as the reference baseline.

Weights are built up over the partial grids ``z_0..z_n`` for increasing
``n``; each step divides by node differences, so the method needs O(N^2)
divisions where the partial-products route needs N.
"""

from __future__ import annotations

from typing import Sequence

from .mlagrange import _check_order
from .tables import WeightTable, as_grid, to_array


def fornberg_weights(grid: Sequence, M: int, center=0) -> WeightTable:
    """Weight table for derivatives ``0..M`` at ``center``."""
    x = as_grid(grid)
    N = len(x)
    _check_order(M, N)
    d = [[0] * (M + 1) for _ in range(N)]
    d[0][0] = 1
    c1 = 1
    c4 = x[0] - center
    for n in range(1, N):
        mn = min(n, M)
        c2 = 1
        c5 = c4
        c4 = x[n] - center
        for nu in range(n):
            c3 = x[n] - x[nu]
            c2 = c2 * c3
            if nu == n - 1:
                # new node: uses the partial-grid weights of node n-1 before they are updated
                for m in range(mn, 0, -1):
                    d[n][m] = c1 * (m * d[n - 1][m - 1] - c5 * d[n - 1][m]) / c2
                d[n][0] = -c1 * c5 * d[n - 1][0] / c2
            for m in range(mn, 0, -1):
                d[nu][m] = (c4 * d[nu][m] - m * d[nu][m - 1]) / c3
            d[nu][0] = c4 * d[nu][0] / c3
        c1 = c2
    if N == 1:
        d[0][0] = 1 / c1
    return WeightTable(x, to_array(d), center)
