# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import logging
import math

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..environment.arms import ArmSet
from ..environment.instance import Instance
from ..environment.rewards import sample_rewards
from ..exceptions import PreconditionError
from .exceptions import BudgetUnreachableError
from .parameters import cab_parameters, default_parameters
from .partition import Partition, build_partition
from .trace import PolicyId, PolicyTrace


def ucbf_index(sum_rewards: float, n_k: int, T: int, delta: float) -> float:
    """
    Upper confidence index of a bin: average reward plus sqrt(log(T/delta) / (2 n_k)).

    :param sum_rewards: sum of the rewards observed in the bin
    :param n_k: number of pulls in the bin, at least 1
    :param T: budget
    :param delta: confidence parameter, 0 < delta < T
    :raises PreconditionError: when n_k < 1 (unpulled bins are initialised, never indexed)
    """
    if n_k < 1:
        raise PreconditionError("ucbf_index needs at least one pull, got n_k={}".format(n_k))
    if not 0.0 < delta < T:
        raise PreconditionError("ucbf_index needs 0 < delta < T, got delta={}, T={}".format(delta, T))
    return sum_rewards / n_k + math.sqrt(math.log(T / delta) / (2.0 * n_k))


@dataclass
class UcbfState:
    """Pull counts n_k and reward sums per bin, after t pulls."""
    T: int
    delta: float
    pulls: np.ndarray
    reward_sums: np.ndarray
    t: int = 0
    _bonus: np.ndarray = field(init=False, repr=False)

    @classmethod
    def empty(cls, bin_count: int, T: int, delta: float, max_count: int) -> 'UcbfState':
        state = cls(T=T, delta=delta, pulls=np.zeros(bin_count, dtype=np.int64),
                    reward_sums=np.zeros(bin_count, dtype=float))
        # sqrt(log(T/delta) / (2 n)) for n = 1..max_count, index 0 unused
        counts = np.arange(max(max_count, 1) + 1, dtype=float)
        counts[0] = 1.0
        state._bonus = np.sqrt(math.log(T / delta) / (2.0 * counts))
        return state

    def record(self, k: int, reward: float) -> None:
        self.pulls[k] += 1
        self.reward_sums[k] += reward
        self.t += 1

    def index(self, k: int) -> float:
        n_k = int(self.pulls[k])
        return float(self.reward_sums[k] / n_k + self._bonus[n_k])


def _reachable(partition: Partition) -> int:
    return int(partition.counts[partition.alive_at_start()].sum())


def ucbf_run(instance: Instance, partition: Partition, delta: float, seed: int,
             policy_id: str = PolicyId.UCBF.value) -> PolicyTrace:
    """
    Run UCBF (d-UCBF when d > 1) for T pulls.

    Bins with N_k >= 2 are alive. Initialisation pulls one uniformly random arm from each
    alive bin in ascending bin order; afterwards every pull goes to the alive bin with the
    largest `ucbf_index` (lowest bin index on ties) and picks a uniformly random unpulled
    arm of that bin. A bin dies when its last arm is pulled.

    :param instance: the problem instance
    :param partition: partition built from the instance's arms
    :param delta: confidence parameter in (0, 1)
    :param seed: seed of the run's random stream
    :returns: the trace of the T pulls
    :raises BudgetUnreachableError: when the alive bins hold fewer than T arms
    """
    if not 0.0 < delta < 1.0:
        raise PreconditionError("delta must lie in (0, 1), got {}".format(delta))
    if partition.N != instance.N:
        raise PreconditionError("partition was built for {} arms, instance has {}".format(partition.N, instance.N))

    T = instance.T
    reachable = _reachable(partition)
    if T > reachable:
        raise BudgetUnreachableError(
            "T={} exceeds the {} arms in bins with at least two arms (K={})".format(T, reachable, partition.K))

    rng = np.random.default_rng(seed)
    pool = partition.pool(rng)
    outcomes = sample_rewards(instance.rewards, instance.means, rng)
    state = UcbfState.empty(partition.bin_count, T, delta, int(partition.counts.max()))

    pulled: List[int] = []
    bins: List[int] = []
    rewards: List[float] = []

    def pull(k: int) -> None:
        arm = pool.draw(k)
        reward = float(outcomes[arm])
        state.record(k, reward)
        pulled.append(arm)
        bins.append(k)
        rewards.append(reward)

    for k in sorted(pool.alive):
        if state.t == T:
            break
        pull(k)

    indices = np.full(partition.bin_count, -np.inf)
    for k in pool.alive:
        indices[k] = state.index(k)

    while state.t < T:
        k = int(np.argmax(indices))
        pull(k)
        indices[k] = state.index(k) if k in pool.alive else -np.inf

    logging.getLogger().debug("%s: K=%d, delta=%.3g, %d pulls, %d bins still alive",
                              policy_id, partition.K, delta, state.t, len(pool.alive))
    return PolicyTrace(
        pulled=np.array(pulled, dtype=np.int64),
        rewards=np.array(rewards, dtype=float),
        policy_id=policy_id,
        seed=seed,
        bins=np.array(bins, dtype=np.int64),
    )


def cab_partition(arms: ArmSet, T: int) -> Partition:
    return build_partition(arms, cab_parameters(T))


def ucbf_cab_run(instance: Instance, seed: int, partition: Optional[Partition] = None) -> PolicyTrace:
    """
    UCBF with the continuum-armed tuning K = floor(sqrt(T) / log(T)) and the default delta.
    """
    if partition is None:
        partition = cab_partition(instance.arms, instance.T)
    delta = default_parameters(instance.N, instance.p, instance.arms.dim).delta
    return ucbf_run(instance, partition, delta, seed, policy_id=PolicyId.UCBF_CAB_K.value)
