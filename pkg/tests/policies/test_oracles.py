# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import numpy as np
import pytest

from fcab.analysis import empirical_bin_means, regret_total
from fcab.environment import ArmOrigin, ArmSet, grid_arms, make_instance
from fcab.exceptions import PreconditionError
from fcab.policies import PolicyId, baseline_random, build_partition, oracle_discrete, oracle_star


def test_oracle_star_sorts_by_mean(grid4_identity):
    trace = oracle_star(grid4_identity)
    assert trace.pulled.tolist() == [3, 2]
    assert trace.policy_id == PolicyId.ORACLE_STAR.value


def test_oracle_star_breaks_ties_by_index(constant_half):
    instance = make_instance(grid_arms(5), constant_half, T=2)
    assert oracle_star(instance).pulled.tolist() == [0, 1]


def test_oracle_star_full_budget(identity):
    instance = make_instance(grid_arms(7), identity, T=7)
    assert sorted(oracle_star(instance, seed=4).pulled.tolist()) == list(range(7))


@pytest.fixture
def three_bins(identity):
    arms = ArmSet(dim=1, covariates=np.array([0.1, 0.2, 0.4, 0.5, 0.8, 0.9]), origin=ArmOrigin.UNIFORM_IID)
    return arms, build_partition(arms, K=3)


@pytest.mark.parametrize("T, full, remainder", [
    (3, [0, 1], 1),
    (6, [0, 1, 2, 3, 4, 5], 0),
    (2, [0, 1], 0),
])
def test_oracle_discrete(identity, three_bins, T, full, remainder):
    arms, partition = three_bins
    instance = make_instance(arms, identity, T=T)
    trace = oracle_discrete(instance, partition, [0.9, 0.5, 0.1], seed=2)
    pulled = trace.pulled.tolist()
    assert len(pulled) == T
    assert set(full) <= set(pulled)
    extra = set(pulled) - set(full)
    assert len(extra) == remainder
    assert extra <= {2, 3}


def test_oracle_discrete_bin_order_ties(identity, three_bins):
    arms, partition = three_bins
    instance = make_instance(arms, identity, T=2)
    trace = oracle_discrete(instance, partition, [0.5, 0.5, 0.5], seed=0)
    assert sorted(trace.pulled.tolist()) == [0, 1]
    assert trace.bins.tolist() == [0, 0]


def test_oracle_discrete_needs_every_bin_mean(identity, three_bins):
    arms, partition = three_bins
    instance = make_instance(arms, identity, T=2)
    with pytest.raises(PreconditionError):
        oracle_discrete(instance, partition, [0.5, 0.5], seed=0)


def test_random_baseline_full_budget(identity):
    instance = make_instance(grid_arms(9), identity, T=9)
    trace = baseline_random(instance, seed=1)
    assert sorted(trace.pulled.tolist()) == list(range(9))


def test_random_baseline_is_reproducible(identity):
    instance = make_instance(grid_arms(50), identity, T=20)
    np.testing.assert_array_equal(baseline_random(instance, seed=3).pulled, baseline_random(instance, seed=3).pulled)
    assert baseline_random(instance, seed=3).policy_id == "random"


def test_random_baseline_expected_regret(identity):
    instance = make_instance(grid_arms(100), identity, T=50)
    regrets = [regret_total(instance, baseline_random(instance, seed)) for seed in range(10 ** 4)]
    # top fifty means sum to 37.75, a uniform half of all arms to 25.25
    assert np.mean(regrets) == pytest.approx(12.5, abs=0.3)


@pytest.mark.parametrize("K, expected", [
    (2, 0.0),
    (3, 600 / 72),
    (5, 3.0),
    (6, 0.0),
])
def test_oracle_discrete_pays_for_a_crossing_inside_a_bin(identity, K, expected):
    # mean x crosses M = 0.5 on a bin edge for even K and mid-bin for odd K, where the
    # expected regret is N h^2 / 8 for bins of width h
    covariates = (np.arange(600) + 0.5) / 600
    arms = ArmSet(dim=1, covariates=covariates, origin=ArmOrigin.UNIFORM_IID)
    instance = make_instance(arms, identity, T=300)
    partition = build_partition(arms, K)
    means_of_bins = empirical_bin_means(instance, partition)
    regrets = [regret_total(instance, oracle_discrete(instance, partition, means_of_bins, seed))
               for seed in range(100)]
    assert np.mean(regrets) == pytest.approx(expected, rel=0.05, abs=1e-9)
