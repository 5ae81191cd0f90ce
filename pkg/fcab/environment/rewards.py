# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
import math

from typing import Annotated, Literal, Union

import numpy as np

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import DomainError


class RewardModelBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    def sample(self, means: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        raise NotImplementedError

    def clipping_bias_bound(self, mean: float) -> float:
        raise NotImplementedError


class Bernoulli(RewardModelBase):
    kind: Literal["bernoulli"] = "bernoulli"

    def sample(self, means: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return (rng.random(means.shape) < means).astype(float)

    def clipping_bias_bound(self, mean: float) -> float:
        return 0.0


class ClippedGaussian(RewardModelBase):
    """
    mean + sigma * Z clipped to [0, 1]. Clipping biases the conditional mean towards 1/2
    by at most sigma / sqrt(2 pi) * exp(-min(mean, 1 - mean)^2 / (2 sigma^2)).
    """
    kind: Literal["clipped_gaussian"] = "clipped_gaussian"
    sigma: float = Field(gt=0.0)

    def sample(self, means: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return np.clip(means + self.sigma * rng.standard_normal(means.shape), 0.0, 1.0)

    def clipping_bias_bound(self, mean: float) -> float:
        gap = min(mean, 1.0 - mean)
        return self.sigma / math.sqrt(2.0 * math.pi) * math.exp(-gap * gap / (2.0 * self.sigma ** 2))


RewardModel = Annotated[Union[Bernoulli, ClippedGaussian], Field(discriminator='kind')]


def _check_means(means: np.ndarray) -> None:
    if np.any(means < 0.0) or np.any(means > 1.0) or np.any(np.isnan(means)):
        raise DomainError("Reward means must lie in [0, 1]")


def sample_reward(model: RewardModelBase, mean: float, rng: np.random.Generator) -> float:
    """
    Draw one reward with conditional mean `mean`.

    :param model: the reward model
    :param mean: m(a_i), in [0, 1]
    :param rng: the caller's random stream
    :returns: a reward in [0, 1]; 0 or 1 for Bernoulli
    :raises DomainError: when mean lies outside [0, 1]
    """
    means = np.array([mean], dtype=float)
    _check_means(means)
    return float(model.sample(means, rng)[0])


def sample_rewards(model: RewardModelBase, means: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Vectorised `sample_reward`: one independent draw per entry of `means`."""
    means = np.asarray(means, dtype=float)
    _check_means(means)
    return model.sample(means, rng)
