# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import logging
import math

from functools import lru_cache
from typing import NamedTuple

from ..exceptions import PreconditionError


class PolicyParameters(NamedTuple):
    K: int
    delta: float
    # K <= max(1/p, 1/(1-p)): the budget does not cover a full bin on either side of M
    below_precondition: bool


def _below_precondition(K: int, p: float) -> bool:
    if p >= 1.0:
        return True
    return K <= max(1.0 / p, 1.0 / (1.0 - p))


def default_parameters(N: int, p: float, dim: int = 1) -> PolicyParameters:
    """
    K and delta of the upper bounds: K = floor(N^(1/3) log(N)^(-2/3)), delta = N^(-4/3)
    in dimension 1 and K = ceil(N^(1/(d+2)) log(N)^(-2/(d+2))),
    delta = N^(-(2d+2)/(d+2)) in dimension d >= 2.

    :raises PreconditionError: when N < 3
    """
    if N < 3:
        raise PreconditionError("default_parameters requires N >= 3, got {}".format(N))
    if not 0.0 < p <= 1.0 or dim < 1:
        raise PreconditionError("default_parameters requires p in (0, 1] and dim >= 1")

    log_n = math.log(N)
    if dim == 1:
        K = math.floor(N ** (1.0 / 3.0) * log_n ** (-2.0 / 3.0))
        delta = N ** (-4.0 / 3.0)
    else:
        K = math.ceil(N ** (1.0 / (dim + 2)) * log_n ** (-2.0 / (dim + 2)))
        delta = N ** (-(2.0 * dim + 2.0) / (dim + 2.0))
    K = max(1, K)

    return PolicyParameters(K=K, delta=delta, below_precondition=_below_precondition(K, p))


@lru_cache(maxsize=None)
def warn_below_precondition(K: int, p: float, N: int) -> None:
    """Logs once per process and parameter triple."""
    logging.getLogger().warning("K=%d does not exceed max(1/p, 1/(1-p)) for p=%.4g, N=%d", K, p, N)


def cab_parameters(T: int) -> int:
    """K = max(1, floor(sqrt(T) / log(T))), the tuning of continuum-armed bandits."""
    if T < 8:
        raise PreconditionError("cab_parameters requires T >= 8, got {}".format(T))
    return max(1, math.floor(math.sqrt(T) / math.log(T)))


def power_law_parameters(T: int, alpha: float, N: int) -> PolicyParameters:
    """
    Tuning for budgets T = 0.5 N^alpha:
    K = floor(alpha^(2/3) (2T)^(1/(3 alpha)) log(2T)^(-2/3)), delta = N^(-4/3).
    """
    if T < 2 or N < 3 or not 0.0 < alpha <= 1.0:
        raise PreconditionError("power_law_parameters requires T >= 2, N >= 3 and alpha in (0, 1]")

    K = math.floor(alpha ** (2.0 / 3.0) * (2.0 * T) ** (1.0 / (3.0 * alpha)) * math.log(2.0 * T) ** (-2.0 / 3.0))
    K = max(1, K)
    return PolicyParameters(K=K, delta=N ** (-4.0 / 3.0), below_precondition=_below_precondition(K, T / N))
