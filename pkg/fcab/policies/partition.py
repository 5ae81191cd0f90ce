# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from dataclasses import dataclass
from typing import List, Set, Tuple

import numpy as np

from ..environment.arms import ArmSet
from ..exceptions import PreconditionError
from .exceptions import PartitionError

MAX_BIN_COUNT = int(np.iinfo(np.int64).max)


@dataclass(frozen=True)
class Partition:
    """
    K^d bins tiling [0, 1]^d. Along each axis bin j covers [j/K, (j+1)/K), the last one is
    closed on the right. Bin indices are the row-major (first axis most significant)
    flattening of the per-axis digits.
    """
    K: int
    dim: int
    assignment: np.ndarray
    counts: np.ndarray
    members: Tuple[np.ndarray, ...]

    @property
    def bin_count(self) -> int:
        return self.K ** self.dim

    @property
    def N(self) -> int:
        return int(self.assignment.shape[0])

    def alive_at_start(self) -> np.ndarray:
        return np.flatnonzero(self.counts >= 2)

    def digits(self, k: int) -> Tuple[int, ...]:
        return tuple(int(d) for d in np.unravel_index(k, (self.K,) * self.dim))

    def bounds(self, k: int) -> Tuple[np.ndarray, np.ndarray]:
        lower = np.asarray(self.digits(k), dtype=float) / self.K
        return lower, lower + 1.0 / self.K

    def pool(self, rng: np.random.Generator) -> 'BinPool':
        return BinPool(self, rng)


class BinPool:
    """
    The per-run lifecycle of a partition: unpulled arms per bin, kept in a uniformly
    random order so that popping the tail is a uniform draw, and the alive set.
    """

    def __init__(self, partition: Partition, rng: np.random.Generator) -> None:
        self.remaining: List[List[int]] = [rng.permutation(members).tolist() for members in partition.members]
        self.alive: Set[int] = set(partition.alive_at_start().tolist())

    def draw(self, k: int) -> int:
        """
        Remove and return a uniformly random unpulled arm of bin k; the bin leaves the
        alive set when this empties it.
        """
        remaining = self.remaining[k]
        if not remaining:
            raise PartitionError("Bin {} has no arms left".format(k))
        arm = remaining.pop()
        if not remaining:
            self.alive.discard(k)
        return arm

    def size(self, k: int) -> int:
        return len(self.remaining[k])


def build_partition(arms: ArmSet, K: int) -> Partition:
    """
    Assign every arm to its bin.

    :param arms: the arm set
    :param K: bins per axis, at least 1
    :returns: the partition with counts N_k and members per bin
    :raises PartitionError: when K^d does not fit a 64-bit index
    """
    if K < 1:
        raise PreconditionError("K must be at least 1, got {}".format(K))
    if K ** arms.dim > MAX_BIN_COUNT:
        raise PartitionError("K^d = {}^{} overflows the bin index".format(K, arms.dim))

    digits = np.minimum(np.floor(arms.covariates * K).astype(np.int64), K - 1)
    if arms.dim == 1:
        assignment = digits[:, 0]
    else:
        assignment = np.ravel_multi_index(tuple(digits.T), (K,) * arms.dim).astype(np.int64)

    bin_count = K ** arms.dim
    counts = np.bincount(assignment, minlength=bin_count)
    order = np.argsort(assignment, kind='stable')
    members = tuple(np.split(order, np.cumsum(counts)[:-1]))

    for array in (assignment, counts):
        array.setflags(write=False)
    return Partition(K=K, dim=arms.dim, assignment=assignment, counts=counts, members=members)
