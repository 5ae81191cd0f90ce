# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import math

from collections import Counter

import numpy as np
import pytest

from fcab.environment import ArmOrigin, ArmSet, PiecewiseLinear, Sinusoid, make_instance, sample_arms_uniform
from fcab.exceptions import PreconditionError
from fcab.policies import (
    BudgetUnreachableError, PolicyId, build_partition, cab_parameters, ucbf_cab_run, ucbf_index, ucbf_run
)


@pytest.mark.parametrize("sum_rewards, n_k, T, delta, expected", [
    (1.2, 2, 100, 0.01, 0.6 + math.sqrt(math.log(1e4) / 4)),
    (0.0, 1, 1, math.exp(-2.0), 1.0),
    (25.0, 50, 100, 0.01, 0.5 + math.sqrt(math.log(1e4) / 100)),
])
def test_ucbf_index(sum_rewards, n_k, T, delta, expected):
    assert ucbf_index(sum_rewards, n_k, T, delta) == pytest.approx(expected, abs=1e-12)


def test_ucbf_index_values():
    assert ucbf_index(1.2, 2, 100, 0.01) == pytest.approx(2.1174271, abs=1e-6)
    assert ucbf_index(25.0, 50, 100, 0.01) == pytest.approx(0.8034854, abs=1e-6)


def test_ucbf_index_needs_a_pull():
    with pytest.raises(PreconditionError):
        ucbf_index(0.0, 0, 100, 0.01)
    with pytest.raises(PreconditionError):
        ucbf_index(1.0, 1, 100, 200.0)


def test_deterministic_rewards(step_instance):
    partition = build_partition(step_instance.arms, K=2)
    trace = ucbf_run(step_instance, partition, delta=0.01, seed=1)
    assert trace.bins.tolist() == [0, 1, 0, 0, 0, 1]
    assert trace.rewards.tolist() == [1.0, 0.0, 1.0, 1.0, 1.0, 0.0]
    assert trace.policy_id == "ucbf"


def test_initialisation_stops_at_the_budget(identity):
    arms = ArmSet(dim=1, covariates=np.array([0.1, 0.2, 0.6, 0.7]), origin=ArmOrigin.UNIFORM_IID)
    instance = make_instance(arms, identity, T=2)
    trace = ucbf_run(instance, build_partition(arms, K=2), delta=0.01, seed=3)
    assert trace.bins.tolist() == [0, 1]
    assert len(trace) == 2


def test_single_arm_bins_are_never_pulled(identity):
    arms = ArmSet(dim=1, covariates=np.array([0.1, 0.6, 0.7, 0.8]), origin=ArmOrigin.UNIFORM_IID)
    instance = make_instance(arms, identity, T=3)
    trace = ucbf_run(instance, build_partition(arms, K=2), delta=0.01, seed=3)
    assert sorted(trace.pulled.tolist()) == [1, 2, 3]


def test_unreachable_budget(identity):
    arms = ArmSet(dim=1, covariates=np.array([0.1, 0.6, 0.7]), origin=ArmOrigin.UNIFORM_IID)
    instance = make_instance(arms, identity, T=3)
    with pytest.raises(BudgetUnreachableError):
        ucbf_run(instance, build_partition(arms, K=2), delta=0.01, seed=0)


def test_delta_range(step_instance):
    with pytest.raises(PreconditionError):
        ucbf_run(step_instance, build_partition(step_instance.arms, K=2), delta=1.5, seed=0)


def test_trace_invariants():
    f = Sinusoid(amplitude=0.4, frequency=1.5, offset=0.5)
    arms = sample_arms_uniform(400, 1, seed=12)
    instance = make_instance(arms, f, T=200)
    partition = build_partition(arms, K=6)
    trace = ucbf_run(instance, partition, delta=1e-3, seed=5)
    assert len(trace) == 200
    assert len(set(trace.pulled.tolist())) == 200
    np.testing.assert_array_equal(partition.assignment[trace.pulled], trace.bins)
    pulls_per_bin = np.bincount(trace.bins, minlength=partition.bin_count)
    assert np.all(pulls_per_bin <= partition.counts)
    # initialisation visits the alive bins in ascending order
    alive = partition.alive_at_start().tolist()
    assert trace.bins[:len(alive)].tolist() == alive


def test_seed_reproduces_the_trace():
    arms = sample_arms_uniform(300, 1, seed=2)
    instance = make_instance(arms, Sinusoid(amplitude=0.3, frequency=1.0, offset=0.5), T=100)
    partition = build_partition(arms, K=5)
    first = ucbf_run(instance, partition, delta=1e-3, seed=77)
    second = ucbf_run(instance, partition, delta=1e-3, seed=77)
    np.testing.assert_array_equal(first.pulled, second.pulled)
    np.testing.assert_array_equal(first.rewards, second.rewards)


def test_two_dimensional_run():
    arms = sample_arms_uniform(400, 2, seed=6)
    instance = make_instance(arms, PiecewiseLinear(breakpoints=[0.0, 1.0], values=[0.0, 1.0]), T=100,
                             resolution=10 ** 4)
    trace = ucbf_run(instance, build_partition(arms, K=3), delta=1e-4, seed=1)
    assert len(trace) == 100
    assert trace.bins.max() < 9


def test_single_bin_draws_uniform_subsets(identity):
    arms = ArmSet(dim=1, covariates=np.linspace(0.05, 0.95, 6), origin=ArmOrigin.UNIFORM_IID)
    instance = make_instance(arms, identity, T=3)
    partition = build_partition(arms, K=1)
    subsets = Counter(tuple(sorted(ucbf_run(instance, partition, 0.5, seed).pulled.tolist()))
                      for seed in range(4000))
    assert len(subsets) == 20
    assert max(subsets.values()) < 300
    assert min(subsets.values()) > 130


def test_argmax_is_invariant_under_increasing_affine_maps():
    rng = np.random.default_rng(0)
    for _ in range(100):
        counts = rng.integers(1, 50, size=8)
        sums = rng.random(8) * counts
        indices = np.array([ucbf_index(s, int(n), 1000, 1e-3) for s, n in zip(sums, counts)])
        scale, shift = rng.random() * 10 + 0.1, rng.normal()
        assert np.argmax(indices) == np.argmax(scale * indices + shift)


def test_cab_tuned_run():
    arms = sample_arms_uniform(1000, 1, seed=4)
    instance = make_instance(arms, Sinusoid(amplitude=0.4, frequency=1.0, offset=0.5), T=500)
    trace = ucbf_cab_run(instance, seed=8)
    assert trace.policy_id == PolicyId.UCBF_CAB_K.value
    assert trace.bins.max() < cab_parameters(500)
