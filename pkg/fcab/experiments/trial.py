# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import logging
import time

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..analysis.bin_means import bin_means as quadrature_bin_means, empirical_bin_means
from ..analysis.diagnostics import DiagnosticsReport, diagnostics
from ..analysis.regret import RegretDecomposition, regret_decompose, regret_total
from ..environment.arms import ArmOrigin, grid_arms, sample_arms_uniform
from ..environment.instance import Instance, make_instance
from ..exceptions import PreconditionError
from ..models import ExperimentConfig, KRuleKind, PowerLaw
from ..policies.baselines import baseline_random
from ..policies.oracles import oracle_discrete, oracle_star
from ..policies.parameters import cab_parameters, default_parameters, power_law_parameters, warn_below_precondition
from ..policies.partition import Partition, build_partition
from ..policies.trace import PolicyId, PolicyTrace
from ..policies.ucbf import ucbf_cab_run, ucbf_run
from .seeding import derive_seed

INSTANCE_LABEL = "instance"
REFERENCE_LABEL = "oracle-discrete-reference"


@dataclass(frozen=True)
class TrialResult:
    policy_id: str
    N: int
    T: int
    K: int
    delta: float
    p: float
    rep: int
    seed: int
    instance_seed: int
    trace: PolicyTrace
    regret: float
    decomposition: RegretDecomposition
    diagnostics: DiagnosticsReport
    wall_ms: float

    def record(self) -> Dict[str, Any]:
        """One line of trials.jsonl; the trace itself is written separately."""
        return {
            'policy': self.policy_id,
            'N': self.N,
            'T': self.T,
            'K': self.K,
            'delta': self.delta,
            'p': self.p,
            'rep': self.rep,
            'seed': self.seed,
            'instance_seed': self.instance_seed,
            'regret': self.regret,
            'wall_ms': self.wall_ms,
            'decomposition': self.decomposition.model_dump(),
            'diagnostics': self.diagnostics.model_dump(),
        }


def build_instance(config: ExperimentConfig, N: int, rep: int) -> Instance:
    """
    The instance of replication `rep` at size N. Every policy of a sweep cell sees the
    same arms.
    """
    instance_seed = derive_seed(config.master_seed, N, INSTANCE_LABEL, rep)
    if config.arms == ArmOrigin.GRID:
        arms = grid_arms(N)
    else:
        arms = sample_arms_uniform(N, config.dim, instance_seed)
    return make_instance(arms, config.mean_function, config.budget(N), config.reward_model, seed=instance_seed)


def policy_parameters(config: ExperimentConfig, N: int, T: int, policy_id: PolicyId) -> Tuple[int, float]:
    """
    K and delta of a policy. `ucbf-cab-k` always uses the continuum-armed K; every other
    policy follows the configured K rule, under which the PowerLaw regimes take the
    budget-dependent rule in dimension 1.
    """
    p = T / N
    defaults = default_parameters(N, p, config.dim)
    if policy_id == PolicyId.UCBF_CAB_K or config.K_rule.kind == KRuleKind.CAB_TUNED:
        return cab_parameters(T), defaults.delta
    if config.K_rule.kind == KRuleKind.EXPLICIT:
        return int(config.K_rule.K), defaults.delta
    if isinstance(config.regime, PowerLaw) and config.dim == 1:
        tuned = power_law_parameters(T, config.regime.alpha, N)
        return tuned.K, tuned.delta
    if defaults.below_precondition:
        warn_below_precondition(defaults.K, p, N)
    return defaults.K, defaults.delta


def compute_bin_means(config: ExperimentConfig, instance: Instance, partition: Partition) -> np.ndarray:
    if config.bin_means == "empirical":
        return empirical_bin_means(instance, partition)
    return quadrature_bin_means(instance.mean, partition)


def run_policy(policy_id: PolicyId, instance: Instance, partition: Partition, delta: float,
               means_of_bins: Optional[np.ndarray], seed: int) -> PolicyTrace:
    if policy_id == PolicyId.UCBF:
        return ucbf_run(instance, partition, delta, seed, policy_id=policy_id.value)
    if policy_id == PolicyId.UCBF_CAB_K:
        return ucbf_cab_run(instance, seed, partition)
    if policy_id == PolicyId.ORACLE_STAR:
        return oracle_star(instance, seed)
    if policy_id == PolicyId.ORACLE_DISCRETE:
        if means_of_bins is None:
            raise PreconditionError("The discretised oracle needs bin means")
        return oracle_discrete(instance, partition, means_of_bins, seed)
    return baseline_random(instance, seed)


def run_trial(config: ExperimentConfig, N: int, policy_id: PolicyId, rep: int) -> TrialResult:
    """
    Run one policy once: build the instance, run the policy and the discretised oracle
    on the policy's partition, and analyse the trace.

    :raises PreconditionError: when the policy is not part of the configuration
    """
    policy_id = PolicyId(policy_id)
    if policy_id not in config.policies:
        raise PreconditionError("Policy {} is not configured".format(policy_id))

    instance = build_instance(config, N, rep)
    K, delta = policy_parameters(config, N, instance.T, policy_id)
    seed = derive_seed(config.master_seed, N, policy_id.value, rep)
    logging.getLogger().debug("trial %s N=%d rep=%d: T=%d K=%d delta=%.3g seed=%d",
                              policy_id, N, rep, instance.T, K, delta, seed)

    started = time.perf_counter()
    partition = build_partition(instance.arms, K)
    means_of_bins = compute_bin_means(config, instance, partition)
    trace = run_policy(policy_id, instance, partition, delta, means_of_bins, seed)
    elapsed = time.perf_counter() - started

    if policy_id == PolicyId.ORACLE_DISCRETE:
        reference = trace
    else:
        reference = oracle_discrete(instance, partition, means_of_bins,
                                    derive_seed(config.master_seed, N, REFERENCE_LABEL, rep))

    return TrialResult(
        policy_id=policy_id.value,
        N=N,
        T=instance.T,
        K=K,
        delta=delta,
        p=instance.p,
        rep=rep,
        seed=seed,
        instance_seed=instance.seed,
        trace=trace,
        regret=regret_total(instance, trace),
        decomposition=regret_decompose(instance, partition, means_of_bins, trace, reference),
        diagnostics=diagnostics(instance, partition, means_of_bins),
        wall_ms=elapsed * 1000.0 if config.record_timing else 0.0,
    )
