"""Finite difference weights from the modified Lagrange formula.

The nodal polynomial ``prod (z - z_k)`` is expanded once up to ``z**(M+1)``;
the coefficients of each cardinal polynomial are then peeled off by dividing
out ``(z - z_k)``. The division step is a back substitution and loses accuracy
quickly once ``M`` exceeds about 4; see :mod:`fdkit.partial` for the stable route.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ArgumentError
from .numkernel import lagrange_weights, multbinom
from .tables import WeightTable, as_grid, to_array


def _check_order(M: int, n: int) -> None:
    if not 0 <= M <= n - 1:
        raise ArgumentError(f"derivative order M={M} outside 0..{n - 1} for {n} grid points")


def find_C(grid: Sequence, M: int) -> list:
    """Coefficients ``C_0..C_{M+1}`` of the nodal polynomial."""
    z = as_grid(grid)
    _check_order(M, len(z))
    C = [1] + [0] * (M + 1)
    for zj in z:
        C = multbinom(C, zj)
    return C


def find_ckm(zk, C: Sequence) -> list:
    """Coefficients ``c_{k,0}..c_{k,M}`` of ``pi*(z) / (z - zk)`` given ``C_0..C_{M+1}``."""
    M = len(C) - 2
    if zk == 0:
        return [C[m + 1] for m in range(M + 1)]
    zeta = 1 / zk
    c = [-zeta * C[0]]
    for m in range(1, M + 1):
        c.append(zeta * (c[m - 1] - C[m]))
    return c


def scale_weights(c: Sequence, wk) -> list:
    """``w_{k,m} = m! * wk * c[m]`` with a running factorial."""
    out = []
    f = wk
    for m, cm in enumerate(c):
        out.append(f * cm)
        f = (m + 1) * f
    return out


def all_weights_mlagrange(grid: Sequence, M: int, center=0) -> WeightTable:
    """Weight table for derivatives ``0..M`` at ``center``."""
    z = as_grid(grid)
    _check_order(M, len(z))
    shifted = [zk - center for zk in z]
    w = lagrange_weights(shifted)
    C = find_C(shifted, M)
    rows = [scale_weights(find_ckm(zk, C), wk) for zk, wk in zip(shifted, w)]
    return WeightTable(z, to_array(rows), center)
