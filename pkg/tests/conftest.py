# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import json

from pathlib import Path

import numpy as np
import pytest

from fcab.environment import ArmOrigin, ArmSet, Constant, PiecewiseLinear, grid_arms, make_instance

RESOURCES = Path(__file__).resolve().parent / 'resources'


@pytest.fixture
def identity():
    return PiecewiseLinear(breakpoints=[0.0, 1.0], values=[0.0, 1.0])


@pytest.fixture
def constant_half():
    return Constant(c=0.5)


@pytest.fixture
def grid4_identity(identity):
    return make_instance(grid_arms(4), identity, T=2)


@pytest.fixture
def step_instance():
    # four arms in [0, 0.5) with mean 1, four in [0.5, 1] with mean 0; rewards are deterministic
    covariates = np.array([0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.9])
    arms = ArmSet(dim=1, covariates=covariates, origin=ArmOrigin.UNIFORM_IID)
    step = PiecewiseLinear(breakpoints=[0.0, 0.49, 0.51, 1.0], values=[1.0, 1.0, 0.0, 0.0])
    return make_instance(arms, step, T=6)


@pytest.fixture
def resource():
    def load(name):
        return json.loads((RESOURCES / name).read_text())
    return load


@pytest.fixture
def write_config(tmp_path, resource):
    def write(name, **overrides):
        document = resource(name)
        document.update(overrides)
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path
    return write
