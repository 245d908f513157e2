"""Finite difference weights from left and right partial products.

With ``l_k = prod_{j<=k} (z - z_j)`` and ``r_k = prod_{j>=k} (z - z_j)`` the
cardinal polynomial of node ``k`` is ``l_{k-1} r_{k+1}``, so its low-order
coefficients come from one truncated convolution. Nothing is ever divided out,
which is what keeps this route accurate for high derivative orders.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ArgumentError
from .mlagrange import _check_order
from . import numkernel
from .numkernel import convolve_trunc, multbinom
from .tables import WeightTable, as_grid, to_array


class FDWeights:
    """Finite difference weights for derivatives ``0..M`` on a fixed grid.

    The Lagrange weights are computed once in the constructor; moving the
    point of differentiation with :meth:`set_center` or :meth:`set_center_node`
    only redoes the partial products and uses no division.

    Node indices are 0-based.

    >>> fd = FDWeights([-1, 0, 1], 2)
    >>> [fd(k) for k in range(3)]
    [1.0, -2.0, 1.0]
    """

    def __init__(self, grid: Sequence, M: int):
        self.grid = as_grid(grid)
        self.N = len(self.grid)
        _check_order(M, self.N)
        self.M = M
        self.lagrange = numkernel.lagrange_weights(self.grid)
        self.set_center(0)

    def set_center(self, zeta) -> "FDWeights":
        """Recompute the weights for derivatives taken at ``zeta``."""
        N, M = self.N, self.M
        shifted = [zk - zeta for zk in self.grid]
        unit = [1] + [0] * M
        # L[k] holds l_k for k = 0..N; R[k] holds r_k for k = 1..N+1 (R[0] unused).
        L = [unit]
        for k in range(N):
            L.append(multbinom(L[k], shifted[k]))
        R = [None] * (N + 2)
        R[N + 1] = unit
        for k in range(N, 0, -1):
            R[k] = multbinom(R[k + 1], shifted[k - 1])
        rows = []
        for k in range(1, N + 1):
            c = convolve_trunc(L[k - 1], R[k + 1], M)
            f = self.lagrange[k - 1]
            row = []
            for m in range(M + 1):
                row.append(f * c[m])
                f = (m + 1) * f
            rows.append(row)
        self.L, self.R = L, R
        self.center = zeta
        self._rows = rows
        return self

    def set_center_node(self, k: int) -> "FDWeights":
        """Take derivatives at grid point ``k``."""
        if not 0 <= k < self.N:
            raise ArgumentError(f"node index {k} outside 0..{self.N - 1}")
        return self.set_center(self.grid[k])

    def weight(self, m: int, k: int):
        """Weight of node ``k`` for the ``m``-th derivative."""
        if not (0 <= m <= self.M and 0 <= k < self.N):
            raise ArgumentError(f"(m={m}, k={k}) outside 0..{self.M} x 0..{self.N - 1}")
        return self._rows[k][m]

    def __call__(self, k: int):
        return self.weight(self.M, k)

    @property
    def table(self) -> WeightTable:
        return WeightTable(self.grid, to_array(self._rows), self.center)


def all_weights_partial(grid: Sequence, M: int, center=0) -> WeightTable:
    """Weight table for derivatives ``0..M`` at ``center``."""
    fd = FDWeights(grid, M)
    if center != 0:
        fd.set_center(center)
    return fd.table


def rescale_weights(table: WeightTable, c) -> WeightTable:
    """Turn the table for the grid ``c*z`` into the table for ``z``.

    Weights for the ``m``-th derivative scale as ``w(z) = c**m * w(c*z)``;
    interpolation weights (``m = 0``) are unchanged.
    """
    if c == 0:
        raise ArgumentError("dilation factor must be nonzero")
    rows = []
    for row in table.weights:
        f = 1
        out = []
        for x in row:
            out.append(x * f)
            f = f * c
        rows.append(out)
    grid = tuple(z / c for z in table.grid)
    return WeightTable(grid, to_array(rows), table.center / c, table.digits)
