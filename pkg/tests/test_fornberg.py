import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from fdkit import all_weights_partial, fornberg_weights
from fdkit.errors import ArgumentError, DuplicateGridPoint
from fdkit.oracle import rational_weights

from conftest import distinct_grids, lattice_grid, normwise_residual, uniform_grid, well_scaled_grids


@pytest.mark.parametrize(
    "grid, M, expected",
    [
        ([-1, 0, 1], 2, [1, -2, 1]),
        ([-1, 1], 1, [-0.5, 0.5]),
    ],
)
def test_classic_stencils_bit_exact(grid, M, expected):
    assert list(fornberg_weights(grid, M).order(M)) == expected


def test_forward_first_derivative():
    ref = [Fraction(-11, 6), Fraction(3), Fraction(-3, 2), Fraction(1, 3)]
    assert list(fornberg_weights([Fraction(k) for k in range(4)], 1).order(1)) == ref
    assert np.allclose(fornberg_weights([0, 1, 2, 3], 1).order(1), [float(x) for x in ref], rtol=1e-15)


@settings(max_examples=50)
@given(distinct_grids(min_size=1, max_size=7))
def test_exact_arithmetic_matches_rational_oracle(z):
    M = len(z) - 1
    c = Fraction(1, 3)
    assert (fornberg_weights(z, M, c).weights == rational_weights(z, M, c).weights).all()


def test_errors():
    with pytest.raises(DuplicateGridPoint):
        fornberg_weights([0.5, 0.5], 0)
    with pytest.raises(ArgumentError):
        fornberg_weights([0, 1, 2], 3)


@settings(max_examples=100)
@given(well_scaled_grids(min_size=2, max_size=12))
def test_moment_conditions(z):
    N = len(z)
    t = fornberg_weights(z, N - 1)
    for m in range(N):
        assert normwise_residual(z, t.order(m), m) <= 1e-12


@pytest.mark.parametrize("family", ["lattice", "uniform"])
def test_agrees_with_partial(family):
    rng = random.Random(7)
    worst = 0.0
    for _ in range(200):
        N = rng.randint(1, 12)
        z = lattice_grid(rng, N) if family == "lattice" else uniform_grid(rng, N)
        M = min(8, N - 1)
        a = fornberg_weights(z, M).weights
        b = all_weights_partial(z, M).weights
        mask = b != 0
        if mask.any():
            worst = max(worst, float(np.max(np.abs(a - b)[mask] / np.abs(b[mask]))))
    assert worst <= 1e-10
