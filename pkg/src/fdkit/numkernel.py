"""Binomial products, truncated convolution, Lagrange weights and root orderings.

Every routine here is written against the arithmetic operators only, so the
same code runs on ``float``, ``complex``, ``fractions.Fraction`` and
``gmpy2.mpfr``. The extended-precision oracle and the exact-arithmetic tests
rely on that.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import ArgumentError, ZeroRootError
from .tables import as_grid, as_points

ORDERINGS = ("natural", "bit_reversed", "leja")


class Permutation(tuple):
    """A tuple of indices; ``fallback`` is True when bit reversal fell back to Leja."""

    fallback: bool

    def __new__(cls, indices, fallback: bool = False):
        self = super().__new__(cls, indices)
        self.fallback = fallback
        return self


def lagrange_weights(grid: Sequence) -> list:
    """Return ``w_k = 1 / prod_{j != k} (z_k - z_j)`` for each grid point."""
    z = as_grid(grid)
    w = []
    for k, zk in enumerate(z):
        p = 1
        for j, zj in enumerate(z):
            if j != k:
                p = p * (zk - zj)
        w.append(1 / p)
    return w


def multbinom(a: Sequence, zeta) -> list:
    """Multiply ``(z - zeta)`` into the polynomial ``a``, keeping degree ``len(a) - 1``."""
    b = [-zeta * a[0]]
    for j in range(1, len(a)):
        b.append(-zeta * a[j] + a[j - 1])
    return b


def convolve_trunc(a: Sequence, b: Sequence, cap: int) -> list:
    """Coefficients ``0..cap`` of the product of ``a`` and ``b``."""
    if len(a) <= cap or len(b) <= cap:
        raise ArgumentError(f"inputs must have at least {cap + 1} coefficients")
    c = []
    for m in range(cap + 1):
        acc = a[m] * b[0]
        for s in range(1, m + 1):
            acc = acc + a[m - s] * b[s]
        c.append(acc)
    return c


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def order_leja(points: Sequence) -> Permutation:
    """Leja ordering: start at the largest modulus, then greedily maximise the
    product of distances to the points already chosen. Ties go to the lowest index.
    """
    z = as_points(points)
    n = len(z)
    if n == 0:
        return Permutation(())
    first = max(range(n), key=lambda i: (abs(z[i]), -i))
    chosen = [first]
    remaining = [i for i in range(n) if i != first]
    # running products of distances to the chosen set
    prod = {i: abs(z[i] - z[first]) for i in remaining}
    while remaining:
        nxt = remaining[0]
        for i in remaining[1:]:
            if prod[i] > prod[nxt]:
                nxt = i
        chosen.append(nxt)
        remaining.remove(nxt)
        for i in remaining:
            prod[i] = prod[i] * abs(z[i] - z[nxt])
    return Permutation(chosen)


def order_bit_reversed(n: int, points: Sequence | None = None) -> Permutation:
    """Bit-reversal permutation of ``range(n)``.

    When ``n`` is not a power of two the Leja ordering of ``points`` is returned
    instead (of ``range(n)`` when no points are given) with ``fallback=True``.
    """
    if n < 0:
        raise ArgumentError(f"negative length {n}")
    if not _is_power_of_two(n):
        if n == 0:
            return Permutation((), fallback=False)
        base = points if points is not None else [float(i) for i in range(n)]
        if len(base) != n:
            raise ArgumentError(f"expected {n} points, got {len(base)}")
        return Permutation(order_leja(base), fallback=True)
    bits = n.bit_length() - 1
    perm = [int(format(i, f"0{bits}b")[::-1], 2) if bits else 0 for i in range(n)]
    return Permutation(perm)


def ordering_permutation(points: Sequence, ordering: str) -> Permutation:
    """Permutation that puts ``points`` into the named ordering."""
    if ordering == "natural":
        return Permutation(range(len(points)))
    if ordering == "bit_reversed":
        return order_bit_reversed(len(points), points)
    if ordering == "leja":
        return order_leja(points)
    raise ArgumentError(f"unknown ordering {ordering!r}; expected one of {ORDERINGS}")


def poly_from_roots(roots: Sequence, ordering: str = "natural", cap: int | None = None) -> list:
    """Coefficients of ``prod (z - root)`` in increasing degree.

    ``cap=None`` returns all ``N+1`` coefficients; otherwise the product is
    truncated after ``z**cap``. Roots are multiplied in the requested order.
    """
    r = as_points(roots)
    n = len(r)
    if cap is None:
        cap = n
    if not 0 <= cap <= n:
        raise ArgumentError(f"cap {cap} outside 0..{n}")
    perm = ordering_permutation(r, ordering)
    a = [1] + [0] * cap
    for i in perm:
        a = multbinom(a, r[i])
    return a


def _csum(values: list):
    # Correctly rounded sums for float and complex; exact types sum directly.
    if all(isinstance(v, float) for v in values):
        return math.fsum(values)
    if all(isinstance(v, (float, complex)) for v in values):
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    total = 0
    for v in values:
        total = total + v
    return total


def coeffs_via_newton_identities(roots: Sequence, cap: int) -> list:
    """Coefficients ``c_0..c_cap`` of ``prod (z - a_k)`` from inverse power sums.

    The power sums ``P_r = sum a_k**-r`` feed the Newton identities for the
    elementary symmetric functions ``E_r`` of the reciprocals, and
    ``c_r = (-1)**(N + r) * E_r * prod a_k``.
    """
    a = as_points(roots)
    n = len(a)
    if not 0 <= cap <= n:
        raise ArgumentError(f"cap {cap} outside 0..{n}")
    if any(x == 0 for x in a):
        raise ZeroRootError("Newton-identity route needs nonzero roots")
    inv = [1 / x for x in a]
    pw = list(inv)
    P = [None]
    for r in range(1, cap + 1):
        P.append(_csum(pw))
        pw = [p * q for p, q in zip(pw, inv)]
    E = [1]
    for r in range(1, cap + 1):
        acc = 0
        for i in range(1, r + 1):
            term = E[r - i] * P[i]
            acc = acc + term if i % 2 else acc - term
        E.append(acc / r)
    prod = 1
    for x in a:
        prod = prod * x
    return [E[r] * prod if (n + r) % 2 == 0 else -(E[r] * prod) for r in range(cap + 1)]


def elementary_symmetric(grid: Sequence, p: int) -> tuple:
    """Return ``(S_p, T_p)``: the ``p``-th elementary symmetric function of the
    grid and the same sum taken over absolute values of the products.
    """
    z = as_grid(grid)
    n = len(z)
    if not 0 <= p <= n:
        raise ArgumentError(f"p={p} outside 0..{n}")
    return _esym(z, p), _esym([abs(x) for x in z], p)


def _esym(z, p):
    e = [1] + [0] * p
    for k, x in enumerate(z, start=1):
        for j in range(min(k, p), 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e[p]
