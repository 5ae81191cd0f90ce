# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import math

import numpy as np
import pytest

from pydantic import ValidationError

from fcab.environment import (
    Constant, LowerBoundMember, PiecewiseLinear, Sinusoid, Tabulated, dump_mean_function, eval_mean,
    load_mean_function
)
from fcab.exceptions import DomainError


def test_constant(constant_half):
    assert eval_mean(constant_half, 0.123) == 0.5
    assert eval_mean(constant_half, [0.2, 0.9]) == 0.5


def test_piecewise_linear_interpolates(identity):
    assert eval_mean(identity, 0.3) == pytest.approx(0.3)
    tent = PiecewiseLinear(breakpoints=[0.0, 0.5, 1.0], values=[0.0, 1.0, 0.0])
    assert eval_mean(tent, 0.25) == pytest.approx(0.5)
    assert eval_mean(tent, 0.75) == pytest.approx(0.5)


@pytest.mark.parametrize("breakpoints, values", [
    ([0.0, 0.5, 0.5, 1.0], [0.0, 0.5, 0.5, 1.0]),
    ([0.1, 1.0], [0.0, 1.0]),
    ([0.0, 1.0], [0.0, 1.5]),
    ([0.0, 1.0], [0.0]),
])
def test_piecewise_linear_rejects_bad_knots(breakpoints, values):
    with pytest.raises(ValidationError):
        PiecewiseLinear(breakpoints=breakpoints, values=values)


def test_eval_outside_cube(identity):
    with pytest.raises(DomainError):
        eval_mean(identity, 1.5)
    with pytest.raises(DomainError):
        eval_mean(identity, -0.1)


def test_sinusoid():
    f = Sinusoid(amplitude=0.4, frequency=1.0, offset=0.5)
    assert eval_mean(f, 0.25) == pytest.approx(0.9)
    assert f.lipschitz_constant() == pytest.approx(2 * math.pi * 0.4)
    with pytest.raises(ValidationError):
        Sinusoid(amplitude=0.6, frequency=1.0, offset=0.5)


def test_tabulated_interpolates():
    f = Tabulated(values=[0.0, 1.0, 0.0])
    assert eval_mean(f, 0.25) == pytest.approx(0.5)
    assert f.lipschitz_constant() == pytest.approx(2.0)


def test_lower_bound_member_at_x0():
    f = LowerBoundMember(role=0, p=0.5, lb_half_width=0.01, L_tilde=0.5)
    assert eval_mean(f, f.x0) == pytest.approx(0.5)
    assert eval_mean(f, f.x1) == pytest.approx(0.5)
    assert eval_mean(f, 0.0) == pytest.approx(0.5 - 0.5 * f.x0)


def test_multidimensional_points_use_the_coordinate_average(identity):
    assert eval_mean(identity, [0.2, 0.6]) == pytest.approx(0.4)
    values = identity.evaluate(np.array([[0.0, 1.0], [1.0, 1.0]]))
    np.testing.assert_allclose(values, [0.5, 1.0])


@pytest.mark.parametrize("f", [
    Constant(c=0.3),
    PiecewiseLinear(breakpoints=[0.0, 0.3, 1.0], values=[0.1, 0.9, 0.2], lipschitz_L=3.0),
    Sinusoid(amplitude=0.2, frequency=2.0, offset=0.4),
    Tabulated(values=[0.2, 0.4, 0.1]),
    LowerBoundMember(role=1, p=0.3, lb_half_width=0.02, L_tilde=0.25, analytic_M=0.5),
])
def test_json_description(f):
    assert load_mean_function(dump_mean_function(f)) == f
    assert load_mean_function(f.describe()) == f


def test_unknown_kind_is_rejected():
    with pytest.raises(ValidationError):
        load_mean_function({'kind': 'polynomial', 'coefficients': [1.0]})
