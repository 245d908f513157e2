import math
import numbers
import random
from fractions import Fraction

import numpy as np
import pytest
from gmpy2 import mpq
from hypothesis import strategies as st

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--fullscale", action="store_true", default=False,
                     help="run the N=512 Chebyshev accuracy check (minutes)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--fullscale"):
        return
    skip = pytest.mark.skip(reason="needs --fullscale")
    for item in items:
        if "fullscale" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


def record(criterion, passed, detail):
    ACCEPTANCE_LINES.append(f"[{criterion:>4}] {'PASS' if passed else 'FAIL'}  {detail}")


def uniform_grid(rng, N, lo=-2.0, hi=2.0, min_sep=1e-2):
    """Uniform points on [lo, hi] with a minimum pairwise separation."""
    while True:
        z = [rng.uniform(lo, hi) for _ in range(N)]
        s = sorted(z)
        if all(b - a >= min_sep for a, b in zip(s, s[1:])):
            return z


def lattice_grid(rng, N, jitter=0.3):
    """Jittered unit lattice, shifted so one node sits exactly at 0."""
    z = [k + rng.uniform(-jitter, jitter) for k in range(N)]
    c = z[rng.randrange(N)]
    return [x - c for x in z]


@pytest.fixture
def rng():
    return random.Random(20240601)


small_ints = st.integers(min_value=-30, max_value=30)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def distinct_grids(draw, elements=rationals, min_size=1, max_size=8):
    return draw(st.lists(elements, min_size=min_size, max_size=max_size, unique=True))


@st.composite
def well_scaled_grids(draw, min_size=1, max_size=12):
    N = draw(st.integers(min_size, max_size))
    jit = draw(st.lists(st.floats(-0.3, 0.3), min_size=N, max_size=N))
    c = draw(st.integers(0, N - 1))
    z = [k + j for k, j in enumerate(jit)]
    return [x - z[c] for x in z]


class Counted:
    """Float wrapper that tallies arithmetic operations into a shared dict."""

    def __init__(self, v, ops):
        self.v = float(v)
        self.ops = ops

    def _wrap(self, v, kind):
        self.ops[kind] = self.ops.get(kind, 0) + 1
        return Counted(v, self.ops)

    @staticmethod
    def _val(x):
        return x.v if isinstance(x, Counted) else x

    def __add__(self, o): return self._wrap(self.v + self._val(o), "add")
    def __radd__(self, o): return self._wrap(self._val(o) + self.v, "add")
    def __sub__(self, o): return self._wrap(self.v - self._val(o), "add")
    def __rsub__(self, o): return self._wrap(self._val(o) - self.v, "add")
    def __mul__(self, o): return self._wrap(self.v * self._val(o), "mul")
    def __rmul__(self, o): return self._wrap(self._val(o) * self.v, "mul")
    def __truediv__(self, o): return self._wrap(self.v / self._val(o), "div")
    def __rtruediv__(self, o): return self._wrap(self._val(o) / self.v, "div")
    def __neg__(self): return Counted(-self.v, self.ops)
    def __abs__(self): return Counted(abs(self.v), self.ops)
    def __eq__(self, o): return self.v == self._val(o)
    def __ne__(self, o): return self.v != self._val(o)
    def __lt__(self, o): return self.v < self._val(o)
    def __gt__(self, o): return self.v > self._val(o)
    def __hash__(self): return hash(self.v)
    def __float__(self): return self.v

    def __repr__(self):
        return f"Counted({self.v!r})"


numbers.Real.register(Counted)


def normwise_residual(z, w, m, center=0):
    """max_n |sum w z^n - m! delta| / max(m!, sum |w z^n|), evaluated exactly."""
    zf = [mpq(Fraction(x)) - mpq(Fraction(center)) for x in z]
    wf = [mpq(float(x)) for x in w]
    fact = math.factorial(m)
    worst = mpq(0)
    for n in range(len(z)):
        terms = [wk * zk**n for wk, zk in zip(wf, zf)]
        r = abs(sum(terms) - (fact if n == m else 0))
        worst = max(worst, r / max(fact, sum(abs(t) for t in terms)))
    return float(worst)


def max_rel_diff(a, b, floor=1e-13):
    """Largest entrywise ``|a - b| / |b|``; entries of ``b`` below ``floor``
    times its largest magnitude are scored against that maximum instead."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    big = np.max(np.abs(b)) if b.size else 0.0
    den = np.where(np.abs(b) > floor * big, np.abs(b), big or 1.0)
    return float(np.max(np.abs(a - b) / den, initial=0.0))


def zero_sum_grid(rng, N, m, den=16):
    """Rational grid with ``S_{N-m} = 0`` exactly, from random base points
    plus a last point solving ``s_r + z_N s_{r-1} = 0``. Returns None when the
    draw is unusable (``s_{r-1} = 0`` or a repeated point)."""
    from fdkit.numkernel import _esym

    r = N - m
    base = set()
    while len(base) < N - 1:
        base.add(Fraction(rng.randint(-4 * den, 4 * den), den))
    base = list(base)
    rng.shuffle(base)
    s_r, s_rm1 = _esym(base, r), _esym(base, r - 1)
    if s_rm1 == 0:
        return None
    zN = -s_r / s_rm1
    if zN in base:
        return None
    return base + [zN]
