# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import numpy as np
import pytest

from fcab.analysis import compute_f_hat, order_bins
from fcab.exceptions import PreconditionError


@pytest.mark.parametrize("counts, T, expected", [
    ((3, 2, 4), 6, 2),
    ((5,), 3, 0),
    ((2, 2, 2), 6, 2),
    ((2, 2, 2), 2, 0),
    ((0, 3), 1, 1),
])
def test_compute_f_hat(counts, T, expected):
    assert compute_f_hat(counts, T) == expected


def test_compute_f_hat_needs_enough_arms():
    with pytest.raises(PreconditionError):
        compute_f_hat((1, 2), 4)


def linear_scan(counts, T):
    total = 0
    for f, count in enumerate(counts):
        if total < T <= total + count:
            return f
        total += count
    raise AssertionError("no f satisfies the sandwich")


def test_compute_f_hat_against_linear_scan():
    rng = np.random.default_rng(2021)
    for _ in range(10 ** 4):
        counts = rng.integers(0, 6, size=rng.integers(1, 12))
        if counts.sum() == 0:
            continue
        T = int(rng.integers(1, counts.sum() + 1))
        f_hat = compute_f_hat(counts, T)
        assert f_hat == linear_scan(counts.tolist(), T)
        assert counts[:f_hat].sum() < T <= counts[:f_hat + 1].sum()


def test_order_bins_breaks_ties_by_index():
    assert order_bins([0.5, 0.9, 0.5, 0.1]).tolist() == [1, 0, 2, 3]
