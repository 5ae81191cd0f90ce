# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
"""
Monte Carlo check of the minimax lower bound: on at least one member of the adversarial
pair, regret of order T^(1/3) p^(-1/3) occurs with probability at least 0.1.
"""
import logging
import math

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ..analysis.bin_means import bin_means
from ..analysis.diagnostics import lower_bound_event
from ..analysis.regret import regret_total
from ..environment.arms import grid_arms
from ..environment.instance import make_instance
from ..environment.lower_bound import InstancePair, instance_kl, make_lower_bound_pair
from ..exceptions import PreconditionError
from ..models import round_half_up
from ..policies.parameters import cab_parameters, default_parameters, warn_below_precondition
from ..policies.partition import build_partition
from ..policies.trace import PolicyId
from .parallel import map_tasks
from .seeding import derive_seed
from .trial import run_policy

REGRET_SCALE = 0.01
TARGET_FREQUENCY = 0.1
EVENT_REGRET_SCALE = 0.22
# N lb_half_width at which the divergence bound is established
KL_REGIME_SIZE = 31.0


class LBReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    N: int
    T: int
    p: float
    L: float
    L_tilde: float
    alpha_lb: float
    lb_half_width: float
    policy: str
    K: int
    replications: int
    master_seed: int
    threshold: float
    frequencies: List[float]
    max_frequency: float
    target_frequency: float = TARGET_FREQUENCY
    meets_target: bool
    mean_regret: List[float]
    event_frequencies: List[float]
    event_regret_bound: float
    kl: float
    kl_bound: float
    kl_within_bound: bool
    notes: List[str] = []


def regret_threshold(T: int, p: float) -> float:
    """0.01 T^(1/3) p^(-1/3)."""
    return REGRET_SCALE * T ** (1.0 / 3.0) * p ** (-1.0 / 3.0)


def _lower_bound_trial(pair: InstancePair, role: int, policy_id: str, T: int, K: int, delta: float,
                       seed: int) -> Tuple[float, bool]:
    member = pair.m0 if role == 0 else pair.m1
    arms = grid_arms(pair.N)
    instance = make_instance(arms, member, T)
    partition = build_partition(arms, K)
    means_of_bins = bin_means(member, partition) if policy_id == PolicyId.ORACLE_DISCRETE.value else None
    trace = run_policy(PolicyId(policy_id), instance, partition, delta, means_of_bins, seed)
    return regret_total(instance, trace), lower_bound_event(pair, arms, trace)


def _regime_notes(pair: InstancePair) -> List[str]:
    notes = [
        "the lower bound needs N >= C_L max(p^-3, (1-p)^-3) = C_L * {:.6g} with an unspecified "
        "constant C_L; a low frequency does not contradict it".format(max(pair.p ** -3, (1.0 - pair.p) ** -3))
    ]
    if pair.N * pair.lb_half_width < KL_REGIME_SIZE:
        notes.append("N * lb_half_width = {:.6g} < {:g}: the divergence bound is outside its regime".format(
            pair.N * pair.lb_half_width, KL_REGIME_SIZE))
    return notes


def lower_bound_protocol(N: int, p: float, L: float, alpha_lb: float, policy_id: PolicyId,
                         replications: int, master_seed: int, threads: Optional[int] = None) -> LBReport:
    """
    Run `policy_id` `replications` times on each member of the pair built from
    (p, L, alpha_lb, N), on grid arms with Bernoulli rewards, and report how often the
    regret reaches 0.01 T^(1/3) p^(-1/3).

    :raises ParameterWindowError: when the pair cannot be built for these parameters
    :raises PreconditionError: when a replication fails
    """
    if replications < 1:
        raise PreconditionError("replications must be positive, got {}".format(replications))
    policy_id = PolicyId(policy_id)
    pair = make_lower_bound_pair(p, L, alpha_lb, N)
    T = min(N, max(1, round_half_up(p * N)))
    if policy_id == PolicyId.UCBF_CAB_K:
        K, delta = cab_parameters(T), default_parameters(N, p).delta
    else:
        defaults = default_parameters(N, p)
        K, delta = defaults.K, defaults.delta
        if defaults.below_precondition:
            warn_below_precondition(K, p, N)

    tasks = [
        (pair, role, policy_id.value, T, K, delta,
         derive_seed(master_seed, N, "lb-m{}-{}".format(role, policy_id), rep))
        for role in (0, 1)
        for rep in range(replications)
    ]
    outcomes = map_tasks(_lower_bound_trial, tasks, threads)
    for outcome in outcomes:
        if isinstance(outcome, BaseException):
            raise PreconditionError("Lower-bound replication failed: {}".format(outcome)) from outcome

    threshold = regret_threshold(T, p)
    frequencies, mean_regret, event_frequencies = [], [], []
    for role in (0, 1):
        block = outcomes[role * replications:(role + 1) * replications]
        regrets = [regret for regret, _ in block]
        frequencies.append(sum(regret >= threshold for regret in regrets) / replications)
        mean_regret.append(math.fsum(regrets) / replications)
        event_frequencies.append(sum(event for _, event in block) / replications)

    kl = instance_kl(pair, grid_arms(N))
    notes = _regime_notes(pair)
    for note in notes:
        logging.getLogger().warning(note)

    report = LBReport(
        N=N, T=T, p=p, L=L, L_tilde=pair.L_tilde, alpha_lb=alpha_lb, lb_half_width=pair.lb_half_width,
        policy=policy_id.value, K=K, replications=replications, master_seed=master_seed,
        threshold=threshold,
        frequencies=frequencies,
        max_frequency=max(frequencies),
        meets_target=max(frequencies) >= TARGET_FREQUENCY,
        mean_regret=mean_regret,
        event_frequencies=event_frequencies,
        event_regret_bound=EVENT_REGRET_SCALE * alpha_lb ** 2 * N ** (1.0 / 3.0),
        kl=kl,
        kl_bound=pair.kl_bound,
        kl_within_bound=kl <= pair.kl_bound,
        notes=notes,
    )
    logging.getLogger().info("lower bound %s N=%d: frequencies %s, KL %.6g <= %.6g", policy_id, N,
                             frequencies, kl, pair.kl_bound)
    return report
