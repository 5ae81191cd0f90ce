# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import numpy as np

from ..environment.instance import Instance
from ..environment.rewards import sample_rewards
from .trace import PolicyId, PolicyTrace


def baseline_random(instance: Instance, seed: int) -> PolicyTrace:
    """Pull a uniformly random subset of T arms, in random order."""
    rng = np.random.default_rng(seed)
    pulled = rng.permutation(instance.N)[:instance.T]
    rewards = sample_rewards(instance.rewards, instance.means[pulled], rng)
    return PolicyTrace(pulled=pulled, rewards=rewards, policy_id=PolicyId.RANDOM.value, seed=seed)
