# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import logging

from collections import defaultdict
from typing import Dict, Iterable, List, NamedTuple, Tuple

import numpy as np

from ..exceptions import PreconditionError
from .sweep import SweepResult

MIN_POINTS = 3


class ExponentFit(NamedTuple):
    slope: float
    intercept: float
    r2: float


def fit_exponent(points: Iterable[Tuple[float, float]]) -> ExponentFit:
    """
    Least-squares line through (ln T, ln regret): regret ~ exp(intercept) T^slope.

    :param points: at least three (T, regret) pairs, all positive
    :returns: slope, intercept and the coefficient of determination (1 for a perfect
        fit, including a constant series)
    :raises PreconditionError: on fewer than three points or a nonpositive value
    """
    data = np.asarray(list(points), dtype=float)
    if data.ndim != 2 or data.shape[0] < MIN_POINTS or data.shape[1] != 2:
        raise PreconditionError("fit_exponent needs at least {} (T, regret) points".format(MIN_POINTS))
    if np.any(~np.isfinite(data)) or np.any(data <= 0.0):
        raise PreconditionError("fit_exponent needs finite positive T and regret values")

    log_t = np.log(data[:, 0])
    log_r = np.log(data[:, 1])
    slope, intercept = np.polyfit(log_t, log_r, 1)
    fitted = slope * log_t + intercept
    ss_res = float(np.sum((log_r - fitted) ** 2))
    ss_tot = float(np.sum((log_r - np.mean(log_r)) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0.0 else 1.0
    return ExponentFit(slope=float(slope), intercept=float(intercept), r2=r2)


def sweep_exponents(result: SweepResult) -> Dict[str, ExponentFit]:
    """
    Fit the regret exponent of every policy of a sweep, on the mean or median regret per
    N as the sweep's summary says. Policies with failed cells, fewer than three sizes or
    zero regret are skipped.
    """
    points: Dict[str, List[Tuple[float, float]]] = defaultdict(list)
    skipped = set()
    for row in result.rows:
        value = row.q50 if result.summary == "median" else row.regret_mean
        if row.error is not None or not value > 0.0:
            skipped.add(row.policy)
        points[row.policy].append((float(row.T), value))

    fits: Dict[str, ExponentFit] = {}
    for policy, series in points.items():
        if policy in skipped or len(series) < MIN_POINTS:
            logging.getLogger().info("no exponent fit for %s", policy)
            continue
        fits[policy] = fit_exponent(series)
    return fits
