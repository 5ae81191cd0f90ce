# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
import math

from typing import Optional

import numpy as np

from pydantic import BaseModel, ConfigDict
from scipy.stats import ttest_rel

from ..exceptions import PreconditionError
from ..models import ExperimentConfig
from ..policies.trace import PolicyId
from .parallel import map_tasks
from .sweep import summarize_trial

CONFIDENCE = 0.95


class PairedComparison(BaseModel):
    """One-sided paired test of H1: policy_a has lower mean regret than policy_b."""
    model_config = ConfigDict(frozen=True)

    N: int
    policy_a: str
    policy_b: str
    replications: int
    mean_a: float
    mean_b: float
    mean_difference: float
    t_statistic: Optional[float]
    p_value: Optional[float]
    a_lower: bool


def paired_comparison(config: ExperimentConfig, N: int, policy_a: PolicyId, policy_b: PolicyId,
                      threads: Optional[int] = None) -> PairedComparison:
    """
    Run both policies on the same `replications` instances at size N and compare their
    regrets pairwise.

    :raises PreconditionError: when a policy is not configured or a trial fails
    """
    policy_a, policy_b = PolicyId(policy_a), PolicyId(policy_b)
    for policy_id in (policy_a, policy_b):
        if policy_id not in config.policies:
            raise PreconditionError("Policy {} is not configured".format(policy_id))

    reps = range(config.replications)
    tasks = [(config, N, policy_id.value, rep) for policy_id in (policy_a, policy_b) for rep in reps]
    outcomes = map_tasks(summarize_trial, tasks, threads)
    for outcome in outcomes:
        if isinstance(outcome, BaseException):
            raise PreconditionError("Trial failed: {}".format(outcome)) from outcome

    regrets_a = np.array([outcome.regret for outcome in outcomes[:len(reps)]])
    regrets_b = np.array([outcome.regret for outcome in outcomes[len(reps):]])

    t_statistic: Optional[float] = None
    p_value: Optional[float] = None
    if len(reps) > 1 and np.any(regrets_a != regrets_b):
        test = ttest_rel(regrets_a, regrets_b, alternative='less')
        if math.isfinite(test.pvalue):
            t_statistic, p_value = float(test.statistic), float(test.pvalue)

    mean_a = math.fsum(regrets_a.tolist()) / len(reps)
    mean_b = math.fsum(regrets_b.tolist()) / len(reps)
    return PairedComparison(
        N=N,
        policy_a=policy_a.value,
        policy_b=policy_b.value,
        replications=len(reps),
        mean_a=mean_a,
        mean_b=mean_b,
        mean_difference=mean_a - mean_b,
        t_statistic=t_statistic,
        p_value=p_value,
        a_lower=p_value is not None and p_value < 1.0 - CONFIDENCE,
    )
