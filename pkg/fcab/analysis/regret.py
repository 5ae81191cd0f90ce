# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import math

from typing import Sequence

import numpy as np

from pydantic import BaseModel, ConfigDict

from ..environment.instance import Instance
from ..exceptions import TraceError
from ..policies.partition import Partition
from ..policies.trace import PolicyTrace
from .ordering import compute_f_hat, order_bins


class RegretDecomposition(BaseModel):
    """
    r_total = r_disc + r_fmab, and r_fmab = r_opt + r_boundary + r_subopt, where r_disc
    is the regret of the discretised oracle and r_fmab the cost of learning the bin
    ranking.
    """
    model_config = ConfigDict(frozen=True)

    r_total: float
    r_disc: float
    r_fmab: float
    r_opt: float
    r_subopt: float
    r_boundary: float
    f_hat: int
    f: int
    m_hat: float
    threshold_M: float


def _fsum(values: np.ndarray) -> float:
    return math.fsum(values.tolist())


def _check_trace(instance: Instance, trace: PolicyTrace) -> None:
    if len(trace) != instance.T:
        raise TraceError("Trace of {} holds {} pulls, the budget is T={}".format(trace.policy_id, len(trace), instance.T))
    if trace.pulled.size and (trace.pulled.min() < 0 or trace.pulled.max() >= instance.N):
        raise TraceError("Trace of {} pulls arms outside 0..{}".format(trace.policy_id, instance.N - 1))


def top_means(instance: Instance) -> np.ndarray:
    """The T largest true means, in decreasing order."""
    return np.sort(instance.means)[::-1][:instance.T]


def m_hat(instance: Instance) -> float:
    """The T-th largest true mean."""
    return float(top_means(instance)[-1])


def regret_total(instance: Instance, trace: PolicyTrace) -> float:
    """
    Sum of the T largest true means minus the sum of the true means of the pulled arms.
    Sampled rewards play no part.

    :raises TraceError: when the trace does not hold exactly T pulls
    """
    _check_trace(instance, trace)
    return _fsum(top_means(instance)) - _fsum(instance.means[trace.pulled])


def regret_decompose(instance: Instance, partition: Partition, bin_means: Sequence[float],
                     trace: PolicyTrace, discrete_trace: PolicyTrace) -> RegretDecomposition:
    """
    Split the regret of `trace` against the discretised oracle run `discrete_trace`.

    With bins ranked by `bin_means`, let A be the arms of the first f_hat bins, B the
    arms of the boundary bin and C the arms of the remaining bins. Then
    r_opt sums m - M over the arms of A left unpulled, r_boundary sums m - M over the
    arms of B pulled by the oracle only and M - m over those pulled by the policy only,
    and r_subopt sums M - m over the pulled arms of C.

    :raises TraceError: when a trace is not T pulls long, or `discrete_trace` is not a
        discretised oracle run for this ranking
    """
    if partition.N != instance.N or len(bin_means) != partition.bin_count:
        raise TraceError("Partition and bin means do not match the instance")
    _check_trace(instance, trace)
    _check_trace(instance, discrete_trace)

    means = instance.means
    M = instance.threshold_M
    ranking = order_bins(bin_means)
    f_hat = compute_f_hat(partition.counts[ranking], instance.T)

    # rank of every bin, then of every arm through its bin
    rank = np.empty(partition.bin_count, dtype=np.int64)
    rank[ranking] = np.arange(partition.bin_count)
    arm_rank = rank[partition.assignment]
    in_top = arm_rank < f_hat
    in_boundary = arm_rank == f_hat
    in_rest = arm_rank > f_hat

    pulled = trace.pulled_mask(instance.N)
    oracle = discrete_trace.pulled_mask(instance.N)
    if not np.all(oracle[in_top]) or np.any(oracle[in_rest]):
        raise TraceError("{} is not a discretised oracle run for this bin ranking".format(discrete_trace.policy_id))

    top = top_means(instance)
    r_total = _fsum(top) - _fsum(means[pulled])
    r_disc = _fsum(top) - _fsum(means[oracle])
    r_fmab = _fsum(means[oracle]) - _fsum(means[pulled])

    r_opt = _fsum(means[in_top & ~pulled] - M)
    r_boundary = _fsum(means[in_boundary & oracle & ~pulled] - M) + _fsum(M - means[in_boundary & pulled & ~oracle])
    r_subopt = _fsum(M - means[in_rest & pulled])

    return RegretDecomposition(
        r_total=r_total,
        r_disc=r_disc,
        r_fmab=r_fmab,
        r_opt=r_opt,
        r_subopt=r_subopt,
        r_boundary=r_boundary,
        f_hat=f_hat,
        f=int(math.floor(instance.p * partition.bin_count)),
        m_hat=float(top[-1]),
        threshold_M=M,
    )
