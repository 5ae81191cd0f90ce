# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
"""
Numerical checks of the weak Lipschitz and margin assumptions. Violations are report
content, never exceptions.
"""
from typing import Iterable, List, Literal, Optional, Tuple

import numpy as np

from pydantic import BaseModel, ConfigDict

from ..config import settings
from ..exceptions import PreconditionError
from .mean_functions import MeanFunctionBase

LIPSCHITZ_MIN_GRID = 1000
FLOAT_TOLERANCE = 1e-12
ROW_BLOCK = 256


class MarginResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    eps: float
    estimate: float
    bound: float
    passed: bool


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    check: Literal["weak_lipschitz", "margin"]
    passed: bool
    M: float
    constant: float
    grid: int
    slack: float
    worst_margin: float
    pairs_checked: int = 0
    worst_pair: Optional[List[List[float]]] = None
    eps_results: List[MarginResult] = []
    notes: List[str] = []


def _closed_grid(grid: int, dim: int) -> np.ndarray:
    per_axis = grid if dim == 1 else max(2, int(round(grid ** (1.0 / dim))))
    axis = np.linspace(0.0, 1.0, per_axis)
    if dim == 1:
        return axis.reshape(-1, 1)
    mesh = np.meshgrid(*([axis] * dim), indexing='ij')
    return np.stack([m.ravel() for m in mesh], axis=1)


def _violations(values: np.ndarray, points: np.ndarray, rows: np.ndarray, cols: np.ndarray,
                M: float, L: float) -> np.ndarray:
    lhs = np.abs(values[rows] - values[cols])
    dist = np.linalg.norm(points[rows] - points[cols], axis=-1)
    return lhs - np.maximum(np.abs(M - values[rows]), L * dist)


def verify_weak_lipschitz(f: MeanFunctionBase, M: float, L: float, grid: int, dim: int = 1) -> ValidationReport:
    """
    Check |m(x) - m(y)| <= max(|M - m(x)|, L ||x - y||_2) on grid pairs.

    All ordered pairs are checked when the grid has at most
    settings.numerics.lipschitz_full_pairs points; otherwise a seeded random sample of
    settings.numerics.lipschitz_random_pairs pairs plus all neighbouring pairs (d = 1).

    :param f: the mean function
    :param M: the threshold level
    :param L: the Lipschitz constant to test
    :param grid: number of grid points, at least 10^3
    :param dim: dimension of the covariate space
    :returns: report with the worst pair and its violation (positive means violated)
    """
    if grid < LIPSCHITZ_MIN_GRID:
        raise PreconditionError("grid must be at least {}, got {}".format(LIPSCHITZ_MIN_GRID, grid))

    points = _closed_grid(grid, dim)
    values = f.evaluate(points)
    n = points.shape[0]

    worst = -np.inf
    worst_pair: Tuple[int, int] = (0, 0)
    pairs_checked = 0

    if n <= int(settings.numerics.lipschitz_full_pairs):
        cols = np.arange(n)
        for start in range(0, n, ROW_BLOCK):
            rows = np.arange(start, min(start + ROW_BLOCK, n))
            violation = _violations(values, points, rows[:, None], cols[None, :], M, L)
            pairs_checked += violation.size
            flat = int(np.argmax(violation))
            if violation.flat[flat] > worst:
                worst = float(violation.flat[flat])
                worst_pair = (int(rows[flat // n]), int(flat % n))
    else:
        rng = np.random.default_rng(int(settings.numerics.validation_seed))
        sample_size = int(settings.numerics.lipschitz_random_pairs)
        rows = rng.integers(0, n, size=sample_size)
        cols = rng.integers(0, n, size=sample_size)
        if dim == 1:
            neighbours = np.arange(n - 1)
            rows = np.concatenate([rows, neighbours, neighbours + 1])
            cols = np.concatenate([cols, neighbours + 1, neighbours])
        violation = _violations(values, points, rows, cols, M, L)
        pairs_checked = violation.size
        flat = int(np.argmax(violation))
        worst = float(violation[flat])
        worst_pair = (int(rows[flat]), int(cols[flat]))

    return ValidationReport(
        check="weak_lipschitz",
        passed=worst <= FLOAT_TOLERANCE,
        M=M,
        constant=L,
        grid=grid,
        slack=FLOAT_TOLERANCE,
        worst_margin=worst,
        pairs_checked=pairs_checked,
        worst_pair=[points[worst_pair[0]].tolist(), points[worst_pair[1]].tolist()],
    )


def _band_measure_1d(f: MeanFunctionBase, M: float, eps: float, grid: int) -> float:
    # length of {|M - m| <= eps} under the linear interpolant of m on each grid cell
    xs = np.linspace(0.0, 1.0, grid + 1)
    values = f.evaluate(xs)
    start, end = values[:-1], values[1:]
    slope = end - start
    flat = slope == 0.0
    with np.errstate(divide='ignore', invalid='ignore'):
        t_low = (M - eps - start) / slope
        t_high = (M + eps - start) / slope
    low = np.clip(np.minimum(t_low, t_high), 0.0, 1.0)
    high = np.clip(np.maximum(t_low, t_high), 0.0, 1.0)
    inside = np.where(flat, (np.abs(M - start) <= eps).astype(float), high - low)
    return float(np.sum(inside)) / grid


def _band_measure_points(f: MeanFunctionBase, M: float, eps: float, grid: int, dim: int) -> float:
    values = f.evaluate(_closed_grid(grid, dim))
    return float(np.count_nonzero(np.abs(M - values) <= eps)) / values.shape[0]


def verify_margin(f: MeanFunctionBase, M: float, Q: float, eps_values: Iterable[float], grid: int,
                  dim: int = 1) -> ValidationReport:
    """
    Check lambda({x : |M - m(x)| <= eps}) <= Q eps for each eps.

    The measure is estimated on a grid of `grid` cells (d = 1, linear interpolation within
    a cell) or points (d > 1); each eps passes when the estimate is at most
    Q eps + 2 / grid.

    :raises PreconditionError: when an eps lies outside (0, 1)
    """
    eps_values = list(eps_values)
    if not eps_values:
        raise PreconditionError("verify_margin needs at least one eps value")
    if any(not 0.0 < eps < 1.0 for eps in eps_values):
        raise PreconditionError("every eps must lie in (0, 1), got {}".format(eps_values))
    if grid < 2:
        raise PreconditionError("grid must be at least 2, got {}".format(grid))

    slack = 2.0 / grid
    results: List[MarginResult] = []
    for eps in eps_values:
        if dim == 1:
            estimate = _band_measure_1d(f, M, eps, grid)
        else:
            estimate = _band_measure_points(f, M, eps, grid, dim)
        bound = Q * eps
        results.append(MarginResult(
            eps=eps,
            estimate=estimate,
            bound=bound,
            passed=estimate <= bound + slack + FLOAT_TOLERANCE
        ))

    return ValidationReport(
        check="margin",
        passed=all(result.passed for result in results),
        M=M,
        constant=Q,
        grid=grid,
        slack=slack,
        worst_margin=max(result.estimate - result.bound for result in results),
        eps_results=results,
    )
