# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import logging
import math

from functools import lru_cache
from typing import Optional

import numpy as np

from ..config import settings
from ..exceptions import PreconditionError
from .mean_functions import MeanFunctionBase, load_mean_function

MIN_RESOLUTION = 1000
# share of the grid sitting exactly at M above which M is reported as a plateau
PLATEAU_FRACTION = 1e-3


def unit_grid(resolution: int, dim: int) -> np.ndarray:
    """
    Left endpoints of a regular grid on [0, 1)^dim with about `resolution` points:
    i / n per axis, n = resolution for dim = 1.
    """
    per_axis = resolution if dim == 1 else max(2, int(round(resolution ** (1.0 / dim))))
    axis = np.arange(per_axis, dtype=float) / per_axis
    if dim == 1:
        return axis.reshape(-1, 1)
    mesh = np.meshgrid(*([axis] * dim), indexing='ij')
    return np.stack([m.ravel() for m in mesh], axis=1)


@lru_cache(maxsize=8)
def _sorted_grid_values(description: str, resolution: int, dim: int) -> np.ndarray:
    f = load_mean_function(description)
    values = np.sort(f.evaluate(unit_grid(resolution, dim)))
    values.setflags(write=False)
    return values


def grid_threshold(values_ascending: np.ndarray, p: float) -> float:
    """
    Infimum of {A : share of values >= A is < p}: the ceil(p n)-th largest value.
    """
    n = values_ascending.shape[0]
    rank = max(1, math.ceil(p * n - 1e-9))
    return float(values_ascending[n - rank])


def compute_threshold_M(f: MeanFunctionBase, p: float, resolution: Optional[int] = None, dim: int = 1) -> float:
    """
    The level M = min{A : lambda({x : m(x) >= A}) < p}.

    Returns `f.analytic_M` when present. Otherwise M is the empirical (1-p)-quantile of f
    on a regular grid of `resolution` points, taking the infimum on plateaus. For an
    L-Lipschitz f the grid error is at most L * dim / resolution.

    :param f: the mean function
    :param p: budget fraction T/N in (0, 1]
    :param resolution: grid size, at least 10^3; defaults to settings.numerics.threshold_resolution
    :param dim: dimension of the covariate space
    :returns: M in [0, 1]
    :raises PreconditionError: when p or resolution is out of range
    """
    if resolution is None:
        resolution = int(settings.numerics.threshold_resolution)
    if not 0.0 < p <= 1.0:
        raise PreconditionError("p must lie in (0, 1], got {}".format(p))
    if resolution < MIN_RESOLUTION:
        raise PreconditionError("resolution must be at least {}, got {}".format(MIN_RESOLUTION, resolution))

    if f.analytic_M is not None:
        return float(f.analytic_M)

    values = _sorted_grid_values(f.describe(), resolution, dim)
    return grid_threshold(values, p)


def threshold_plateau(f: MeanFunctionBase, M: float, resolution: Optional[int] = None, dim: int = 1) -> bool:
    """
    Whether f is flat at level M on a set of positive measure, the case where the
    infimum convention of `compute_threshold_M` decides the value.
    """
    if resolution is None:
        resolution = int(settings.numerics.threshold_resolution)

    values = _sorted_grid_values(f.describe(), resolution, dim)
    at_level = np.count_nonzero(np.abs(values - M) <= 1e-12)
    plateau = at_level >= max(3, PLATEAU_FRACTION * values.shape[0])
    if plateau:
        logging.getLogger().warning("Mean function is flat at the threshold M=%.6f; infimum convention applied", M)
    return bool(plateau)
