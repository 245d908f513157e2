"""Order of accuracy, boost detection and leading error constants.

A stencil for ``f^(m)(0)`` on ``N`` points is generically ``O(h^(N-m))``.
The order is raised by ``b`` exactly when the elementary symmetric functions
``S_{N-m}, ..., S_{N-m+b-1}`` of the grid all vanish; on a real grid ``b``
is at most 1.
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .errors import ArgumentError, DegenerateConstant
from .numkernel import elementary_symmetric
from .partial import all_weights_partial
from .tables import WeightTable, as_grid

DEFAULT_TAU = 1e3 * sys.float_info.epsilon


class BoostCapWarning(RuntimeWarning):
    """The numerical boost test claimed more than the real-grid cap allows."""


@dataclass
class AccuracyReport:
    m: int
    N: int
    base_order: int
    boost: int
    order: int
    error_constant: float
    leading_coefficient: float
    leading_term: str
    tolerance: float
    s_values: list = field(default_factory=list)
    remark: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class MomentResiduals:
    """``residuals[n] = |sum_k w_k z_k^n - m! delta_{n,m}|`` for ``n < N`` and
    ``probes[b-1] = sum_k w_k z_k^(N-1+b)`` for ``b = 1..m+1``."""

    residuals: list
    probes: list

    def max_scaled(self, m: int) -> float:
        return max(float(r) for r in self.residuals) / math.factorial(m)


def _check_m(m: int, N: int) -> None:
    if m == 0:
        raise ArgumentError("m = 0 is interpolation; the order-of-accuracy analysis needs m >= 1")
    if not 1 <= m <= N - 1:
        raise ArgumentError(f"derivative order m={m} outside 1..{N - 1}")


def _is_real(z) -> bool:
    return not any(isinstance(x, complex) for x in z)


def _boost_probe(z, m, tau):
    N = len(z)
    b = 0
    probes = []
    while b < m:
        S, T = elementary_symmetric(z, N - m + b)
        probes.append((N - m + b, S, T))
        if abs(S) < tau * T:
            b += 1
        else:
            break
    return b, probes


def detect_boost(grid: Sequence, m: int, tau: float = DEFAULT_TAU) -> int:
    """Largest ``b <= m`` with ``|S_{N-m+i}| < tau * T_{N-m+i}`` for ``i < b``.

    A result above 1 on a real grid contradicts Newton's inequalities and can
    only come from a loose ``tau``; a :class:`BoostCapWarning` is issued.
    """
    z = as_grid(grid)
    _check_m(m, len(z))
    if not tau > 0:
        raise ArgumentError(f"tolerance must be positive, got {tau}")
    b, _ = _boost_probe(z, m, tau)
    if b > 1 and _is_real(z):
        warnings.warn(
            f"boost test reports b={b} on a real grid; the true boost is at most 1 "
            f"(tolerance {tau:g} too loose)",
            BoostCapWarning,
            stacklevel=2,
        )
    return b


def moment_residuals(grid: Sequence, weights: WeightTable, m: int) -> MomentResiduals:
    """Moment-condition residuals and the boost probes for order ``m``."""
    z = as_grid(grid)
    N = len(z)
    w = weights.order(m)
    shifted = [x - weights.center for x in z]
    fact = math.factorial(m)

    def moment(n):
        acc = 0
        for wk, zk in zip(w, shifted):
            acc = acc + wk * zk**n
        return acc

    residuals = [abs(moment(n) - (fact if n == m else 0)) for n in range(N)]
    probes = [moment(N - 1 + b) for b in range(1, m + 2)]
    return MomentResiduals(residuals, probes)


def _constant(w, z, p):
    C = 0
    scale = 0
    for wk, zk in zip(w, z):
        t = wk * zk**p
        C = C + t
        scale = scale + abs(t)
    return C, scale


def analyze(grid: Sequence, m: int, weights: WeightTable | None = None, tau: float = DEFAULT_TAU) -> AccuracyReport:
    """Order of accuracy and leading error term of the stencil for ``f^(m)``.

    Derivatives are taken at ``weights.center`` (0 when ``weights`` is
    omitted, in which case the partial-products weights are used). The
    leading error of ``sum_k w_k f(h z_k) / h^m - f^(m)(0)`` is
    ``C f^(r+m)(0) / (r+m)! h^r`` with ``C = sum_k w_k z_k^(r+m)``.
    """
    z = as_grid(grid)
    N = len(z)
    _check_m(m, N)
    if weights is None:
        weights = all_weights_partial(z, m)
    if weights.N != N or weights.M < m:
        raise ArgumentError("weight table does not match the grid and derivative order")
    shifted = [x - weights.center for x in z]
    b, probes = _boost_probe(shifted, m, tau)
    if b > 1 and _is_real(z):
        warnings.warn(f"boost test reports b={b} on a real grid; capping at 1", BoostCapWarning, stacklevel=2)
        b = 1
    r = N - m + b
    w = list(weights.order(m))
    C, scale = _constant(w, shifted, r + m)
    if abs(C) < tau * scale:
        candidates = []
        for rr in (N - m, N - m + 1):
            cc, _ = _constant(w, shifted, rr + m)
            candidates.append({"order": rr, "error_constant": float(cc)})
        raise DegenerateConstant(
            f"error constant cancels at order {r} (|C| < tau * sum|w z^{r + m}|); tolerance {tau:g} is mistuned",
            candidates,
        )
    p = r + m
    C = float(C)
    coef = C / math.factorial(p)
    term = f"{C!r} * f^({p})(0) / {p}! * h^{r}"
    return AccuracyReport(
        m=m,
        N=N,
        base_order=N - m,
        boost=b,
        order=r,
        error_constant=C,
        leading_coefficient=coef,
        leading_term=term,
        tolerance=tau,
        s_values=[{"p": p_, "S": float(S), "T": float(T)} for p_, S, T in probes],
        remark=(
            f"conjectured exact form: {C!r} * f^({p})(xi) / {p}! * h^{r} "
            "for some xi in an interval containing 0 and the grid"
        ),
    )
