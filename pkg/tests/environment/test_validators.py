# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import pytest

from fcab.environment import PiecewiseLinear, make_lower_bound_pair, verify_margin, verify_weak_lipschitz
from fcab.exceptions import PreconditionError


@pytest.mark.parametrize("M", [0.0, 0.3, 0.9])
def test_identity_is_weakly_lipschitz(identity, M):
    report = verify_weak_lipschitz(identity, M, L=1.0, grid=1000)
    assert report.passed
    assert report.check == "weak_lipschitz"
    assert report.pairs_checked == 1000 * 1000


def test_jump_across_threshold_fails():
    step = PiecewiseLinear(breakpoints=[0.0, 0.5, 0.5001, 1.0], values=[0.0, 0.0, 1.0, 1.0])
    report = verify_weak_lipschitz(step, 0.5, L=1.0, grid=1000)
    assert not report.passed
    assert report.worst_margin > 0.4
    (x,), (y,) = report.worst_pair
    assert min(x, y) <= 0.5 <= max(x, y)


def test_sampled_pairs_on_large_grids(identity):
    report = verify_weak_lipschitz(identity, 0.5, L=1.0, grid=5000)
    assert report.passed
    assert report.pairs_checked > 10 ** 6


def test_grid_floor(identity):
    with pytest.raises(PreconditionError):
        verify_weak_lipschitz(identity, 0.5, L=1.0, grid=100)


def test_margin_of_identity(identity):
    assert verify_margin(identity, 0.7, Q=2.0, eps_values=[0.1], grid=1000).passed
    report = verify_margin(identity, 0.7, Q=1.0, eps_values=[0.1], grid=1000)
    assert not report.passed
    assert report.eps_results[0].estimate == pytest.approx(0.2)


def test_margin_eps_range(identity):
    with pytest.raises(PreconditionError):
        verify_margin(identity, 0.7, Q=2.0, eps_values=[0.0], grid=1000)
    with pytest.raises(PreconditionError):
        verify_margin(identity, 0.7, Q=2.0, eps_values=[1.0], grid=1000)


@pytest.mark.parametrize("p", [0.3, 0.5, 0.7])
@pytest.mark.parametrize("L", [0.3, 0.5, 1.0])
def test_lower_bound_members_satisfy_assumptions(p, L):
    pair = make_lower_bound_pair(p=p, L=L, alpha_lb=0.23, N=10 ** 6)
    Q = 6.0 * max(1.0 / L, 2.0)
    for member in (pair.m0, pair.m1):
        assert verify_weak_lipschitz(member, 0.5, pair.L_tilde, grid=10 ** 5).passed
        assert verify_margin(member, 0.5, Q, [0.001, 0.01, 0.05, 0.1], grid=10 ** 5).passed
