# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
"""
Bin means m_k: the average of the mean-reward function over a bin of the partition, or
the within-bin average of the true means of the arms it holds.
"""
import math

from typing import Optional, Sequence

import numpy as np

from ..config import settings
from ..environment.instance import Instance
from ..environment.mean_functions import MeanFunctionBase
from ..exceptions import DomainError
from ..policies.partition import Partition


def _average_piecewise_linear(xs: np.ndarray, ys: np.ndarray, a: float, b: float) -> float:
    inner = xs[(xs > a) & (xs < b)]
    nodes = np.concatenate(([a], inner, [b]))
    values = np.interp(nodes, xs, ys)
    area = math.fsum((0.5 * (values[1:] + values[:-1]) * np.diff(nodes)).tolist())
    return area / (b - a)


def quadrature_nodes_per_axis(dim: int, nodes: Optional[int] = None) -> int:
    nodes = int(settings.numerics.quadrature_nodes) if nodes is None else nodes
    if dim == 1:
        return nodes
    budget = int(settings.numerics.quadrature_budget)
    return max(1, min(nodes, int(math.floor(budget ** (1.0 / dim)))))


def quadrature_error_bound(f: MeanFunctionBase, lower: np.ndarray, upper: np.ndarray, nodes: int) -> float:
    """Error bound of the composite midpoint rule: L * diag / (2 * nodes)."""
    diagonal = float(np.linalg.norm(np.asarray(upper) - np.asarray(lower)))
    return f.lipschitz_constant() * diagonal / (2.0 * nodes)


def bin_mean(f: MeanFunctionBase, lower: Sequence[float], upper: Sequence[float],
             nodes: Optional[int] = None) -> float:
    """
    Average of f over the box [lower, upper].

    Exact for constant functions and for piecewise-linear profiles in dimension 1;
    otherwise composite midpoint quadrature with `nodes` points per axis (capped by the
    quadrature budget when d > 1).

    :raises DomainError: when the box leaves the unit cube or is degenerate
    """
    lower = np.atleast_1d(np.asarray(lower, dtype=float))
    upper = np.atleast_1d(np.asarray(upper, dtype=float))
    if lower.shape != upper.shape or np.any(lower < 0.0) or np.any(upper > 1.0) or np.any(upper <= lower):
        raise DomainError("Bin [{}, {}] is not a box inside the unit cube".format(lower, upper))

    dim = lower.shape[0]
    knots = f.knots()
    if knots is not None:
        xs, ys = knots
        if np.all(ys == ys[0]):
            return float(ys[0])
        if dim == 1:
            return _average_piecewise_linear(xs, ys, float(lower[0]), float(upper[0]))

    per_axis = quadrature_nodes_per_axis(dim, nodes)
    offsets = (np.arange(per_axis, dtype=float) + 0.5) / per_axis
    axes = [lo + (hi - lo) * offsets for lo, hi in zip(lower, upper)]
    if dim == 1:
        points = axes[0].reshape(-1, 1)
    else:
        mesh = np.meshgrid(*axes, indexing='ij')
        points = np.stack([m.ravel() for m in mesh], axis=1)
    return float(np.mean(f.evaluate(points)))


def bin_means(f: MeanFunctionBase, partition: Partition, nodes: Optional[int] = None) -> np.ndarray:
    """`bin_mean` of every bin of the partition, indexed by bin."""
    values = np.empty(partition.bin_count, dtype=float)
    for k in range(partition.bin_count):
        lower, upper = partition.bounds(k)
        values[k] = bin_mean(f, lower, upper, nodes)
    return values


def empirical_bin_means(instance: Instance, partition: Partition) -> np.ndarray:
    """
    Within-bin average of the true arm means. Empty bins get -inf so that they rank last.
    """
    sums = np.bincount(partition.assignment, weights=instance.means, minlength=partition.bin_count)
    values = np.full(partition.bin_count, -np.inf)
    filled = partition.counts > 0
    values[filled] = sums[filled] / partition.counts[filled]
    return values
