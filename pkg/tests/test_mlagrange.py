import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from fdkit import all_weights_mlagrange, all_weights_partial, find_C, find_ckm, scale_weights
from fdkit.errors import ArgumentError, DuplicateGridPoint
from fdkit.oracle import rational_weights

from conftest import Counted, distinct_grids, lattice_grid, normwise_residual, well_scaled_grids

F = Fraction


@pytest.mark.parametrize(
    "grid, M, expected",
    [
        ([-1, 0, 1], 1, [0, -1, 0]),
        ([2], 0, [-2, 1]),
        ([0, 0.5], 0, [0, -0.5]),
    ],
)
def test_find_C_examples(grid, M, expected):
    assert find_C(grid, M) == expected


def test_find_C_order_range():
    with pytest.raises(ArgumentError):
        find_C([0, 1], 2)
    with pytest.raises(ArgumentError):
        find_C([0, 1], -1)


@pytest.mark.parametrize(
    "zk, expected",
    [(0, [-1, 0]), (1, [0, 1]), (-1, [0, -1])],
)
def test_find_ckm_examples(zk, expected):
    assert find_ckm(zk, [0, -1, 0]) == expected


@given(distinct_grids(min_size=2, max_size=7))
def test_find_ckm_recovers_cardinal_polynomial(z):
    # c_k times (z - z_k) must reproduce the nodal coefficients it was peeled from
    M = len(z) - 1
    C = find_C(z, M)
    for zk in z:
        c = find_ckm(zk, C)
        prod = [-zk * c[0]] + [c[m - 1] - zk * c[m] for m in range(1, M + 1)] + [c[M]]
        assert prod == C


@pytest.mark.parametrize(
    "c, wk, expected",
    [
        ([-1, 0], -1, [1, 0]),
        ([0, 1], F(1, 2), [0, F(1, 2)]),
        ([1, 0, 0], 1, [1, 0, 0]),
    ],
)
def test_scale_weights_examples(c, wk, expected):
    assert scale_weights(c, wk) == expected


def test_scale_weights_factorials():
    assert scale_weights([1, 1, 1, 1, 1], 1) == [1, 1, 2, 6, 24]


@pytest.mark.parametrize(
    "grid, M, expected",
    [
        ([-1, 0, 1], 2, [1, -2, 1]),
        ([-1, 1], 1, [-0.5, 0.5]),
    ],
)
def test_classic_stencils_bit_exact(grid, M, expected):
    assert list(all_weights_mlagrange(grid, M).order(M)) == expected


def test_forward_stencil_matches_rational_solve():
    z = [F(0), F(1), F(2), F(3)]
    ref = rational_weights(z, 1).order(1)
    assert list(ref) == [F(-11, 6), F(3), F(-3, 2), F(1, 3)]
    assert list(all_weights_mlagrange(z, 1).order(1)) == list(ref)
    assert np.allclose(all_weights_mlagrange([0, 1, 2, 3], 1).order(1), [float(x) for x in ref], rtol=1e-14)


@settings(max_examples=50)
@given(distinct_grids(min_size=1, max_size=7))
def test_exact_arithmetic_matches_rational_oracle(z):
    M = len(z) - 1
    got = all_weights_mlagrange(z, M)
    ref = rational_weights(z, M)
    assert (got.weights == ref.weights).all()


def test_center_shift_matches_rational_oracle():
    z = [F(-1), F(0), F(1), F(3)]
    got = all_weights_mlagrange(z, 3, center=F(1, 2))
    assert (got.weights == rational_weights(z, 3, F(1, 2)).weights).all()
    assert got.center == F(1, 2)


def test_interpolation_row_sums_to_one():
    t = all_weights_mlagrange([-1.5, -0.2, 0.7, 2.0], 3, center=0.3)
    assert math.isclose(sum(t.order(0)), 1.0, rel_tol=1e-14)


def test_duplicate_points():
    with pytest.raises(DuplicateGridPoint):
        all_weights_mlagrange([0, 1, 0], 1)


@settings(max_examples=100)
@given(well_scaled_grids(min_size=2, max_size=12))
def test_moment_conditions(z):
    N = len(z)
    t = all_weights_mlagrange(z, N - 1)
    for m in range(N):
        assert normwise_residual(z, t.order(m), m) <= 1e-8


def test_agrees_with_partial_for_low_orders():
    rng = random.Random(11)
    worst = 0.0
    for _ in range(200):
        N = rng.randint(2, 12)
        z = lattice_grid(rng, N)
        M = min(4, N - 1)
        a = all_weights_mlagrange(z, M).weights
        b = all_weights_partial(z, M).weights
        mask = b != 0
        worst = max(worst, float(np.max(np.abs(a - b)[mask] / np.abs(b[mask]))))
    assert worst <= 1e-10


def test_operation_count_linear_in_M_per_node():
    # O(N^2) for the Lagrange weights plus O(MN) for everything else
    def count(N, M):
        ops = {}
        z = [Counted(k + 0.25 * (k % 3), ops) for k in range(N)]
        all_weights_mlagrange(z, M)
        return sum(ops.values())

    N = 40
    base = count(N, 1)
    for M in (2, 4, 8, 16):
        extra = count(N, M) - base
        assert 0 < extra <= 10 * N * (M - 1)
    lagrange_only = 2 * N * (N - 1)
    assert count(N, 1) <= lagrange_only + 20 * N
    # divisions: one reciprocal per Lagrange weight and one per node in the back substitution
    ops = {}
    all_weights_mlagrange([Counted(k + 0.5, ops) for k in range(N)], 8)
    assert ops["div"] == 2 * N
