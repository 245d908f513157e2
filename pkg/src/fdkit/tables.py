"""Grid validation and the containers shared by the weight modules."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from numbers import Integral, Real
from typing import Any, Sequence

import numpy as np

from .errors import ArgumentError, DuplicateGridPoint


def _coerce(x):
    # Plain ints and numpy scalars become float; Fraction, mpfr, complex pass through.
    if isinstance(x, bool):
        raise ArgumentError(f"grid point {x!r} is not a number")
    if isinstance(x, (Integral, np.integer, np.floating)):
        return float(x)
    return x


def as_points(points: Sequence) -> tuple:
    """Validate a sequence of finite scalars without a distinctness check."""
    out = tuple(_coerce(x) for x in points)
    for x in out:
        if isinstance(x, complex):
            ok = math.isfinite(x.real) and math.isfinite(x.imag)
        else:
            try:
                ok = math.isfinite(x)
            except (TypeError, ValueError, OverflowError):
                ok = False
        if not ok:
            raise ArgumentError(f"non-finite point {x!r}")
    return out


def as_grid(points: Sequence, *, min_size: int = 1) -> tuple:
    """Return the points as a tuple after checking they are finite, real and distinct.

    Raises :class:`DuplicateGridPoint` naming the first coincident pair.
    """
    grid = as_points(points)
    if len(grid) < min_size:
        raise ArgumentError(f"grid needs at least {min_size} point(s), got {len(grid)}")
    for x in grid:
        if not isinstance(x, Real):
            raise ArgumentError(f"grid points must be real, got {x!r}")
    order = sorted(range(len(grid)), key=lambda i: grid[i])
    for a, b in zip(order, order[1:]):
        if grid[a] == grid[b]:
            i, j = sorted((a, b))
            raise DuplicateGridPoint(i, j, grid[i])
    return grid


def to_array(rows) -> np.ndarray:
    """Pack nested rows into a float64 array when possible, else an object array."""
    flat = [x for row in rows for x in row]
    if all(isinstance(x, float) for x in flat):
        return np.array(rows, dtype=float)
    arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            arr[i, j] = x
    return arr


def fmt(x) -> str:
    """Shortest round-trip decimal for a float; ``str`` for anything else."""
    if isinstance(x, (float, np.floating)):
        return float.__repr__(float(x))
    return str(x)


def _jsonable(x):
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, (Integral, np.integer)):
        return int(x)
    try:
        return float(x)
    except (TypeError, ValueError):
        return str(x)


@dataclass(frozen=True)
class WeightTable:
    """Finite difference weights ``weights[k, m]`` for node ``k`` and derivative order ``m``.

    ``grid`` is in the caller's node order and ``center`` is the point of
    differentiation. ``digits`` records the working precision for tables
    produced by the extended-precision oracle.
    """

    grid: tuple
    weights: np.ndarray
    center: Any = 0
    digits: int | None = None

    @property
    def N(self) -> int:
        return self.weights.shape[0]

    @property
    def M(self) -> int:
        return self.weights.shape[1] - 1

    def order(self, m: int) -> np.ndarray:
        """Weights for the ``m``-th derivative, one per node."""
        if not 0 <= m <= self.M:
            raise ArgumentError(f"derivative order {m} outside 0..{self.M}")
        return self.weights[:, m]

    def to_dict(self) -> dict:
        return {
            "grid": [_jsonable(z) for z in self.grid],
            "M": self.M,
            "center": _jsonable(self.center),
            "weights": [[_jsonable(x) for x in row] for row in self.weights],
        }


@dataclass(frozen=True)
class DiffMatrix:
    """Spectral differentiation matrix: ``f^(order)(z_i) ~ sum_j entries[i, j] f(z_j)``."""

    grid: tuple
    order: int
    entries: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def apply(self, values) -> np.ndarray:
        return self.entries @ np.asarray(values)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "order": self.order,
            "grid": [_jsonable(z) for z in self.grid],
            "entries": [[_jsonable(x) for x in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self.entries:
            writer.writerow([fmt(x) for x in row])
        return buf.getvalue()

    @classmethod
    def from_dict(cls, data: dict) -> "DiffMatrix":
        entries = np.array(data["entries"], dtype=float)
        if entries.shape != (data["n"], data["n"]):
            raise ArgumentError("entries shape does not match n")
        return cls(tuple(data["grid"]), int(data["order"]), entries)

    @classmethod
    def from_csv(cls, text: str, grid, order: int) -> "DiffMatrix":
        rows = [[float(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
        return cls(tuple(grid), order, np.array(rows, dtype=float))
