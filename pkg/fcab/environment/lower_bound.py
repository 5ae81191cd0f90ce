# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
import math

import numpy as np

from pydantic import BaseModel, ConfigDict
from scipy.special import rel_entr

from ..exceptions import ParameterWindowError, PreconditionError
from .arms import ArmOrigin, ArmSet
from .mean_functions import LowerBoundMember

KL_BUDGET_FACTOR = 70.4


class InstancePair(BaseModel):
    """Two mean functions that agree outside [x0, x1] and share the threshold 1/2."""
    model_config = ConfigDict(frozen=True)

    m0: LowerBoundMember
    m1: LowerBoundMember
    p: float
    L: float
    N: int
    lb_half_width: float
    x0: float
    x1: float
    alpha_lb: float
    L_tilde: float

    @property
    def kl_bound(self) -> float:
        return KL_BUDGET_FACTOR * self.alpha_lb ** 3


def make_lower_bound_pair(p: float, L: float, alpha_lb: float, N: int) -> InstancePair:
    """
    Build the adversarial pair (m0, m1).

    With L_tilde = min(L, 1/2) and lb_half_width = alpha_lb * (N L_tilde^2)^(-1/3), both
    members are piecewise linear with slopes +/- L_tilde; they differ only on
    [x0, x1] = [1 - p - 2 lb_half_width, 1 - p + 2 lb_half_width].

    :param p: budget fraction
    :param L: Lipschitz constant of the class
    :param alpha_lb: scale of the bumps, in (20 N^(-2/3), 0.5]
    :param N: number of arms
    :raises ParameterWindowError: when alpha_lb or the bump width violate the window, i.e.
        N is too small for the size condition of the lower bound
    """
    if N < 1 or L <= 0.0 or not 0.0 < p < 1.0:
        raise PreconditionError("make_lower_bound_pair requires N >= 1, L > 0 and p in (0, 1)")

    alpha_floor = 20.0 * N ** (-2.0 / 3.0)
    if not alpha_floor < alpha_lb <= 0.5:
        raise ParameterWindowError(
            "alpha_lb must lie in (20 N^(-2/3), 0.5] = ({:.6g}, 0.5], got {}".format(alpha_floor, alpha_lb))

    L_tilde = min(L, 0.5)
    lb_half_width = alpha_lb * (N * L_tilde ** 2) ** (-1.0 / 3.0)
    if not 2.0 * lb_half_width < min(p, 1.0 - p):
        raise ParameterWindowError(
            "2 * lb_half_width = {:.6g} must be smaller than min(p, 1 - p) = {:.6g}; increase N".format(
                2.0 * lb_half_width, min(p, 1.0 - p)))

    members = [
        LowerBoundMember(
            role=role, p=p, lb_half_width=lb_half_width, L_tilde=L_tilde,
            lipschitz_L=L_tilde, margin_Q=6.0 * max(1.0 / L, 2.0), analytic_M=0.5
        )
        for role in (0, 1)
    ]
    return InstancePair(
        m0=members[0],
        m1=members[1],
        p=p,
        L=L,
        N=N,
        lb_half_width=lb_half_width,
        x0=members[0].x0,
        x1=members[0].x1,
        alpha_lb=alpha_lb,
        L_tilde=L_tilde,
    )


def bernoulli_kl(p: float, q: float) -> float:
    """
    Kullback-Leibler divergence between Bernoulli(p) and Bernoulli(q).

    :raises PreconditionError: unless both p and q lie strictly inside (0, 1)
    """
    if not (0.0 < p < 1.0 and 0.0 < q < 1.0):
        raise PreconditionError("bernoulli_kl needs p, q in (0, 1), got ({}, {})".format(p, q))
    return float(rel_entr(p, q) + rel_entr(1.0 - p, 1.0 - q))


def instance_kl(pair: InstancePair, arms: ArmSet) -> float:
    """
    Sum over arms of kl(m0(a_i), m1(a_i)): the divergence between the laws of the
    rewards of all N arms under m0 and m1, which bounds the divergence of any history.
    """
    if arms.dim != 1 or arms.origin != ArmOrigin.GRID:
        raise PreconditionError("instance_kl expects one-dimensional grid arms")

    means0 = pair.m0.evaluate(arms.covariates)
    means1 = pair.m1.evaluate(arms.covariates)
    differ = means0 != means1
    p, q = means0[differ], means1[differ]
    if np.any(p <= 0.0) or np.any(p >= 1.0) or np.any(q <= 0.0) or np.any(q >= 1.0):
        raise PreconditionError("instance_kl needs means strictly inside (0, 1) where the members differ")
    return math.fsum(rel_entr(p, q) + rel_entr(1.0 - p, 1.0 - q))
