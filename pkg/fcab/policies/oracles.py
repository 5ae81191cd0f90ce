# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from typing import List, Sequence

import numpy as np

from ..analysis.ordering import compute_f_hat, order_bins
from ..environment.instance import Instance
from ..environment.rewards import sample_rewards
from ..exceptions import PreconditionError
from .partition import Partition
from .trace import PolicyId, PolicyTrace


def oracle_star(instance: Instance, seed: int = 0) -> PolicyTrace:
    """
    Pull the T arms with the largest true means, in decreasing order of the mean
    (ties by ascending arm index). Only the rewards are random.
    """
    order = np.argsort(-instance.means, kind='stable')
    pulled = order[:instance.T]
    rng = np.random.default_rng(seed)
    rewards = sample_rewards(instance.rewards, instance.means[pulled], rng)
    return PolicyTrace(pulled=pulled, rewards=rewards, policy_id=PolicyId.ORACLE_STAR.value, seed=seed)


def oracle_discrete(instance: Instance, partition: Partition, bin_means: Sequence[float],
                    seed: int) -> PolicyTrace:
    """
    The oracle of the discretised problem: with bins ranked by `bin_means`, pull every arm
    of the first f_hat bins, then T - (N_1 + .. + N_f_hat) uniformly random arms of the
    boundary bin f_hat + 1.

    :param instance: the problem instance
    :param partition: partition built from the instance's arms
    :param bin_means: one value per bin, used only for the ranking
    :param seed: seed of the draw in the boundary bin and of the rewards
    :raises PreconditionError: on a bin_means of the wrong length or T > N
    """
    if len(bin_means) != partition.bin_count:
        raise PreconditionError("Expected {} bin means, got {}".format(partition.bin_count, len(bin_means)))
    if instance.T > partition.N:
        raise PreconditionError("T={} exceeds N={}".format(instance.T, partition.N))

    ranking = order_bins(bin_means)
    f_hat = compute_f_hat(partition.counts[ranking], instance.T)
    rng = np.random.default_rng(seed)

    pulled: List[np.ndarray] = []
    bins: List[np.ndarray] = []
    for k in ranking[:f_hat]:
        members = partition.members[k]
        pulled.append(members)
        bins.append(np.full(members.shape[0], k, dtype=np.int64))

    remainder = instance.T - int(partition.counts[ranking[:f_hat]].sum())
    if remainder > 0:
        boundary = int(ranking[f_hat])
        pulled.append(rng.choice(partition.members[boundary], size=remainder, replace=False))
        bins.append(np.full(remainder, boundary, dtype=np.int64))

    arms = np.concatenate(pulled).astype(np.int64)
    rewards = sample_rewards(instance.rewards, instance.means[arms], rng)
    return PolicyTrace(pulled=arms, rewards=rewards, policy_id=PolicyId.ORACLE_DISCRETE.value,
                       seed=seed, bins=np.concatenate(bins))
