# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import numpy as np
import pytest

from fcab.environment import ArmOrigin, ArmSet, grid_arms, sample_arms_uniform
from fcab.exceptions import PreconditionError
from fcab.policies import PartitionError, build_partition


def arms_at(*covariates):
    return ArmSet(dim=1, covariates=np.array(covariates, dtype=float), origin=ArmOrigin.UNIFORM_IID)


def test_half_open_bins():
    partition = build_partition(arms_at(0.2, 0.19, 0.4), K=5)
    assert partition.assignment.tolist() == [1, 0, 2]
    lower, upper = partition.bounds(1)
    assert lower.tolist() == [0.2]
    assert upper.tolist() == [0.4]


def test_right_end_belongs_to_last_bin():
    assert build_partition(arms_at(1.0), K=5).assignment.tolist() == [4]


def test_two_dimensional_digits():
    arms = ArmSet(dim=2, covariates=np.array([[0.4, 0.9], [0.0, 0.0], [1.0, 1.0]]), origin=ArmOrigin.UNIFORM_IID)
    partition = build_partition(arms, K=3)
    assert partition.bin_count == 9
    assert partition.assignment.tolist() == [5, 0, 8]
    assert partition.digits(5) == (1, 2)


def test_counts_and_members():
    arms = sample_arms_uniform(500, 2, seed=9)
    partition = build_partition(arms, K=4)
    assert partition.counts.sum() == 500
    for k, members in enumerate(partition.members):
        assert members.shape[0] == partition.counts[k]
        assert np.all(partition.assignment[members] == k)
        lower, upper = partition.bounds(k)
        inside = (arms.covariates[members] >= lower) & (arms.covariates[members] <= upper)
        assert np.all(inside)


def test_alive_bins_need_two_arms():
    partition = build_partition(arms_at(0.1, 0.6, 0.7), K=2)
    assert partition.alive_at_start().tolist() == [1]


def test_pool_lifecycle():
    partition = build_partition(grid_arms(12), K=3)
    pool = partition.pool(np.random.default_rng(4))
    alive_sizes = [len(pool.alive)]
    drawn = []
    for k in (0, 0, 0, 1):
        drawn.append(pool.draw(k))
        alive_sizes.append(len(pool.alive))
    assert 0 not in pool.alive
    assert alive_sizes == sorted(alive_sizes, reverse=True)
    assert len(set(drawn)) == 4
    assert pool.size(1) == partition.counts[1] - 1
    with pytest.raises(PartitionError):
        pool.draw(0)


def test_invalid_k():
    with pytest.raises(PreconditionError):
        build_partition(grid_arms(4), K=0)


def test_bin_index_overflow():
    arms = ArmSet(dim=8, covariates=np.full((1, 8), 0.5), origin=ArmOrigin.UNIFORM_IID)
    with pytest.raises(PartitionError):
        build_partition(arms, K=2 ** 10)
