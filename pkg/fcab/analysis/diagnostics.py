# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import math

from typing import Optional, Sequence

import numpy as np

from pydantic import BaseModel, ConfigDict

from ..environment.arms import ArmSet
from ..environment.instance import Instance
from ..environment.lower_bound import InstancePair
from ..exceptions import PreconditionError
from ..policies.partition import Partition
from ..policies.trace import PolicyTrace
from .ordering import compute_f_hat, order_bins
from .regret import m_hat


class DiagnosticsReport(BaseModel):
    """
    Measured counterparts of the quantities the upper-bound argument controls, scaled so
    that values of order 1 are expected. Pure report, no verdicts.
    """
    model_config = ConfigDict(frozen=True)

    f: int
    f_hat: int
    f_gap: int
    m_hat: float
    threshold_M: float
    # |M_hat - M| K / L, None for L = 0
    m_hat_gap_scaled: Optional[float]
    # max_k |N_k - N/K^d| 2 K^d / N
    count_deviation_scaled: float
    max_count_deviation: float
    ordering_consistent: bool


def ordering_consistent(instance: Instance, partition: Partition, ranking: np.ndarray, f_hat: int) -> bool:
    """
    True when every arm of the first f_hat ranked bins has mean >= M and every arm of
    the bins ranked after the boundary bin has mean <= M; r_opt and r_subopt are then
    nonnegative.
    """
    rank = np.empty(partition.bin_count, dtype=np.int64)
    rank[ranking] = np.arange(partition.bin_count)
    arm_rank = rank[partition.assignment]
    M = instance.threshold_M
    top_ok = bool(np.all(instance.means[arm_rank < f_hat] >= M))
    rest_ok = bool(np.all(instance.means[arm_rank > f_hat] <= M))
    return top_ok and rest_ok


def diagnostics(instance: Instance, partition: Partition, bin_means: Sequence[float]) -> DiagnosticsReport:
    if len(bin_means) != partition.bin_count:
        raise PreconditionError("Expected {} bin means, got {}".format(partition.bin_count, len(bin_means)))

    ranking = order_bins(bin_means)
    f_hat = compute_f_hat(partition.counts[ranking], instance.T)
    f = int(math.floor(instance.p * partition.bin_count))

    estimate = m_hat(instance)
    L = instance.mean.lipschitz_constant()
    gap = abs(estimate - instance.threshold_M)
    scaled_gap = gap * partition.K / L if L > 0.0 else None

    expected = instance.N / partition.bin_count
    deviation = float(np.max(np.abs(partition.counts - expected)))

    return DiagnosticsReport(
        f=f,
        f_hat=f_hat,
        f_gap=abs(f_hat - f),
        m_hat=estimate,
        threshold_M=instance.threshold_M,
        m_hat_gap_scaled=scaled_gap,
        count_deviation_scaled=deviation * 2.0 * partition.bin_count / instance.N,
        max_count_deviation=deviation,
        ordering_consistent=ordering_consistent(instance, partition, ranking, f_hat),
    )


def lower_bound_event(pair: InstancePair, arms: ArmSet, trace: PolicyTrace) -> bool:
    """
    The event that decides between the two members of a lower-bound pair: at least
    N lb_half_width - 2 of the pulled arms have a covariate in [x0, 1 - p]. It costs
    regret under m0, its complement costs regret under m1.
    """
    covariates = arms.covariates[:, 0]
    window = (covariates >= pair.x0) & (covariates <= 1.0 - pair.p)
    pulled_in_window = int(np.count_nonzero(window[trace.pulled]))
    return pulled_in_window >= arms.n * pair.lb_half_width - 2.0
