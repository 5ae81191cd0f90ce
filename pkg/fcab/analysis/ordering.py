# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from typing import Sequence

import numpy as np

from ..exceptions import PreconditionError


def order_bins(bin_means: Sequence[float]) -> np.ndarray:
    """Bin indices by decreasing bin mean, ties by ascending bin index."""
    means = np.asarray(bin_means, dtype=float)
    return np.argsort(-means, kind='stable')


def compute_f_hat(ordered_counts: Sequence[int], T: int) -> int:
    """
    The number of leading bins that fit entirely in the budget:
    N_1 + .. + N_f < T <= N_1 + .. + N_(f+1).

    :param ordered_counts: arm counts, ordered by decreasing bin mean
    :param T: budget, at least 1
    :raises PreconditionError: when the counts hold fewer than T arms
    """
    counts = np.asarray(ordered_counts, dtype=np.int64)
    if T < 1:
        raise PreconditionError("T must be positive, got {}".format(T))
    if counts.size == 0 or np.any(counts < 0):
        raise PreconditionError("ordered_counts must be a non-empty list of nonnegative integers")
    cumulative = np.cumsum(counts)
    if cumulative[-1] < T:
        raise PreconditionError("counts hold {} arms, fewer than T={}".format(int(cumulative[-1]), T))
    return int(np.searchsorted(cumulative, T, side='left'))
