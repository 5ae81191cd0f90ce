# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..exceptions import PreconditionError
from .arms import ArmSet
from .mean_functions import MeanFunctionBase
from .rewards import Bernoulli, RewardModelBase
from .threshold import compute_threshold_M


@dataclass(frozen=True)
class Instance:
    """
    An F-CAB problem: N arms, their mean-reward function, the reward model and the budget
    T = p N. `means` caches m(a_i) for every arm.
    """
    arms: ArmSet
    mean: MeanFunctionBase
    rewards: RewardModelBase
    T: int
    p: float
    threshold_M: float
    seed: int = 0
    means: np.ndarray = field(repr=False, default=None)

    @property
    def N(self) -> int:
        return self.arms.n


def make_instance(arms: ArmSet, mean: MeanFunctionBase, T: int, rewards: Optional[RewardModelBase] = None,
                  seed: int = 0, resolution: Optional[int] = None) -> Instance:
    """
    Assemble an instance and compute its threshold.

    :param arms: the arm set
    :param mean: the mean-reward function
    :param T: budget, 0 < T <= N
    :param rewards: reward model, Bernoulli when omitted
    :param seed: seed the arm set was drawn with, kept for bookkeeping
    :param resolution: grid size passed to compute_threshold_M
    :raises PreconditionError: when T is out of range
    """
    if not 0 < T <= arms.n:
        raise PreconditionError("Budget T must satisfy 0 < T <= N = {}, got {}".format(arms.n, T))

    p = T / arms.n
    threshold_M = compute_threshold_M(mean, p, resolution, dim=arms.dim)
    means = mean.evaluate(arms.covariates)
    means.setflags(write=False)

    return Instance(
        arms=arms,
        mean=mean,
        rewards=rewards if rewards is not None else Bernoulli(),
        T=T,
        p=p,
        threshold_M=threshold_M,
        seed=seed,
        means=means,
    )
