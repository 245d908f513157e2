"""Extended-precision reference weights and rounding-error measurement.

Reference tables replay the partial-products recurrences in ``gmpy2.mpfr``
arithmetic, with nodes taken in bit-reversed (or Leja) order as in the
double-precision Chebyshev path; results come back in the caller's order.
Grid points are taken as the exact values of their doubles, so what is
measured is rounding error in the weight computation, not in grid
generation. For small rational grids, :func:`rational_weights` solves the
moment system exactly and is independent of every weight algorithm here.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import gmpy2
import numpy as np

from .errors import ArgumentError
from .mlagrange import _check_order
from .numkernel import ordering_permutation
from .partial import FDWeights
from .spectral import default_ordering
from .tables import DiffMatrix, WeightTable, as_grid, to_array

DEFAULT_DIGITS = 50
MIN_DIGITS = 30
DOUBLE_DIGITS = 16


def default_digits() -> int:
    """Oracle precision, overridable through ``FDKIT_ORACLE_DIGITS``."""
    return int(os.environ.get("FDKIT_ORACLE_DIGITS", DEFAULT_DIGITS))


def _bits(digits: int) -> int:
    return int(math.ceil(digits * math.log2(10))) + 4


def _check_digits(digits: int) -> None:
    if digits < MIN_DIGITS:
        raise ArgumentError(f"oracle precision must be at least {MIN_DIGITS} digits, got {digits}")


def _to_mpfr(x):
    if isinstance(x, Fraction):
        return gmpy2.mpfr(gmpy2.mpq(x.numerator, x.denominator))
    return gmpy2.mpfr(x)


def _oracle_order(z, ordering):
    return ordering_permutation(z, ordering or default_ordering(len(z)))


def exact_weights(
    grid: Sequence, M: int, center=0, digits: int | None = None, ordering: str | None = None
) -> WeightTable:
    """Weight table computed with ``digits`` significant decimal digits.

    ``ordering`` is the order in which nodes enter the products; by default
    bit reversal for power-of-two sizes and Leja otherwise.
    """
    digits = default_digits() if digits is None else digits
    _check_digits(digits)
    z = as_grid(grid)
    _check_order(M, len(z))
    perm = _oracle_order(z, ordering)
    with gmpy2.context(gmpy2.get_context(), precision=_bits(digits)):
        fd = FDWeights([_to_mpfr(z[i]) for i in perm], M)
        if center != 0:
            fd.set_center(_to_mpfr(center))
        rows = [None] * len(z)
        for a, i in enumerate(perm):
            rows[i] = fd.table.weights[a]
    return WeightTable(z, to_array(rows), center, digits)


def exact_diff_matrix(
    grid: Sequence, M: int, digits: int | None = None, dilation: int = 1, ordering: str | None = None
) -> DiffMatrix:
    """Order-``M`` differentiation matrix in extended precision.

    ``dilation`` is applied (exactly, as a power of two is expected) before
    the computation and undone afterwards, mirroring the double-precision
    Chebyshev path. Rows and columns are in the caller's node order.
    """
    digits = default_digits() if digits is None else digits
    _check_digits(digits)
    z = as_grid(grid)
    N = len(z)
    _check_order(M, N)
    perm = _oracle_order(z, ordering)
    out = [[None] * N for _ in range(N)]
    with gmpy2.context(gmpy2.get_context(), precision=_bits(digits)):
        fd = FDWeights([_to_mpfr(z[i]) * dilation for i in perm], M)
        scale = gmpy2.mpfr(dilation) ** M
        for a, pa in enumerate(perm):
            fd.set_center_node(a)
            for b, pb in enumerate(perm):
                out[pa][pb] = fd(b) * scale
    return DiffMatrix(z, M, to_array(out), {"digits": digits})


def rational_weights(grid: Sequence, M: int, center=0) -> WeightTable:
    """Exact weights from the moment system ``sum_k w_k (z_k - c)^n = m! delta_{nm}``.

    Solved by Gaussian elimination over ``Fraction``; meant for small grids.
    """
    z = [Fraction(x) for x in as_grid(grid)]
    N = len(z)
    _check_order(M, N)
    c = Fraction(center)
    V = [[(zk - c) ** n for zk in z] for n in range(N)]
    cols = []
    for m in range(M + 1):
        rhs = [Fraction(math.factorial(m)) if n == m else Fraction(0) for n in range(N)]
        cols.append(_solve(V, rhs))
    rows = [[cols[m][k] for m in range(M + 1)] for k in range(N)]
    return WeightTable(tuple(z), to_array(rows), c)


def _solve(A, b):
    n = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def _det(A):
    n = len(A)
    a = [list(row) for row in A]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def boost_determinant(grid: Sequence, m: int, beta: int) -> Fraction:
    """``det[z_j ** n_i]`` with exponents ``0..N-1, N-1+beta`` and ``m`` removed.

    Brute-force cross-check for the symmetric-function boost conditions; use
    only for small grids.
    """
    z = [Fraction(x) for x in as_grid(grid)]
    N = len(z)
    exps = [n for n in list(range(N)) + [N - 1 + beta] if n != m]
    return _det([[zj**n for zj in z] for n in exps])


def vandermonde(grid: Sequence) -> Fraction:
    """``prod_{i<j} (z_j - z_i)`` in exact arithmetic."""
    z = [Fraction(x) for x in as_grid(grid)]
    out = Fraction(1)
    for j in range(len(z)):
        for i in range(j):
            out *= z[j] - z[i]
    return out


@dataclass
class DigitsLost:
    """Per-entry relative error and digits lost, plus their maxima."""

    rel: np.ndarray
    digits: np.ndarray
    max_rel: float
    max_digits: float


def _values(x) -> np.ndarray:
    if isinstance(x, WeightTable):
        return x.weights
    if isinstance(x, DiffMatrix):
        return x.entries
    return np.asarray(x, dtype=object)


def _reference_digits(reference) -> int:
    if isinstance(reference, WeightTable) and reference.digits:
        return reference.digits
    if isinstance(reference, DiffMatrix) and reference.meta.get("digits"):
        return reference.meta["digits"]
    return DEFAULT_DIGITS


def digits_lost(approx, reference, digits: int | None = None) -> DigitsLost:
    """Score ``approx`` against a high-precision ``reference``.

    Per entry ``rel = |approx - ref| / |ref|`` and ``d = max(0, log10(rel) + 16)``
    rounded to one decimal. Entries with ``|ref|`` below ``10**-digits`` times the
    largest reference magnitude are scored against that maximum instead.
    """
    a = _values(approx)
    r = _values(reference)
    if a.shape != r.shape:
        raise ArgumentError(f"shape mismatch: {a.shape} vs {r.shape}")
    if digits is None:
        digits = _reference_digits(reference)
    with gmpy2.context(gmpy2.get_context(), precision=_bits(digits)):
        ref = [[_to_mpfr(x) for x in row] for row in r]
        app = [[_to_mpfr(x) for x in row] for row in a]
        big = max((abs(x) for row in ref for x in row), default=gmpy2.mpfr(0))
        floor = big * gmpy2.mpfr(10) ** (-digits)
        rel = np.zeros(a.shape)
        for i, (rrow, arow) in enumerate(zip(ref, app)):
            for j, (x, y) in enumerate(zip(rrow, arow)):
                den = abs(x) if abs(x) > floor else (big or 1)
                err = abs(y - x)
                rel[i, j] = 0.0 if err == 0 else float(err / den)
    with np.errstate(divide="ignore"):
        d = np.where(rel > 0, np.log10(np.where(rel > 0, rel, 1.0)) + DOUBLE_DIGITS, 0.0)
    d = np.round(np.maximum(d, 0.0), 1)
    return DigitsLost(rel, d, float(rel.max(initial=0.0)), float(d.max(initial=0.0)))


def error_map_rows(approx, reference, label: str = "", digits: int | None = None) -> list:
    """``(label, i, j, rel, digits_lost)`` rows for an error-map CSV."""
    res = digits_lost(approx, reference, digits)
    rows = []
    for (i, j), rel in np.ndenumerate(res.rel):
        rows.append((label, i, j, float(rel), float(res.digits[i, j])))
    return rows
