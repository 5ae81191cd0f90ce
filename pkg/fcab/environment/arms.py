# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..exceptions import DomainError, PreconditionError


class ArmOrigin(str, Enum):
    UNIFORM_IID = "uniform"
    GRID = "grid"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ArmSet:
    """
    The covariates of the N arms of an instance.

    `covariates` has shape (N, dim); arm i is identified with row i.
    """
    dim: int
    covariates: np.ndarray
    origin: ArmOrigin

    def __post_init__(self) -> None:
        covariates = np.asarray(self.covariates, dtype=float)
        if covariates.ndim == 1:
            covariates = covariates.reshape(-1, 1)
        if covariates.ndim != 2 or covariates.shape[1] != self.dim:
            raise PreconditionError("Covariates must have shape (N, {}), got {}".format(self.dim, covariates.shape))
        if covariates.shape[0] < 1:
            raise PreconditionError("An arm set holds at least one arm")
        if np.any(covariates < 0.0) or np.any(covariates > 1.0):
            raise DomainError("Every covariate coordinate must lie in [0, 1]")
        covariates.setflags(write=False)
        object.__setattr__(self, 'covariates', covariates)

    @property
    def n(self) -> int:
        return int(self.covariates.shape[0])

    def __len__(self) -> int:
        return self.n


def sample_arms_uniform(n: int, dim: int, seed: int) -> ArmSet:
    """
    Draw n covariates i.i.d. uniformly on [0, 1]^dim.

    :param n: number of arms, at least 1
    :param dim: dimension of the covariate space, at least 1
    :param seed: seed of the generator; equal seeds give equal arm sets
    :returns: the arm set
    :raises PreconditionError: when n or dim is smaller than 1
    """
    if n < 1 or dim < 1:
        raise PreconditionError("sample_arms_uniform requires n >= 1 and dim >= 1, got n={}, dim={}".format(n, dim))

    rng = np.random.default_rng(seed)
    return ArmSet(dim=dim, covariates=rng.random((n, dim)), origin=ArmOrigin.UNIFORM_IID)


def grid_arms(n: int) -> ArmSet:
    """
    One-dimensional grid covariates, arm i (1-based) at i/n.

    :param n: number of arms, at least 1
    :returns: the arm set (0.25, 0.5, 0.75, 1.0) for n = 4
    """
    if n < 1:
        raise PreconditionError("grid_arms requires n >= 1, got {}".format(n))

    covariates = np.arange(1, n + 1, dtype=float) / n
    return ArmSet(dim=1, covariates=covariates.reshape(-1, 1), origin=ArmOrigin.GRID)
