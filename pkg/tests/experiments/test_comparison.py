# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import pytest

from fcab.exceptions import PreconditionError
from fcab.experiments import paired_comparison
from fcab.models import ExperimentConfig
from fcab.policies import PolicyId


@pytest.fixture
def config(resource):
    document = resource('minimal.json')
    document.update(policies=["oracle-star", "random", "ucbf"], replications=12, master_seed=3)
    return ExperimentConfig.model_validate(document)


def test_oracle_beats_random(config):
    comparison = paired_comparison(config, 100, PolicyId.ORACLE_STAR, PolicyId.RANDOM)
    assert comparison.mean_a == 0.0
    assert comparison.mean_b > 0.0
    assert comparison.mean_difference == -comparison.mean_b
    assert comparison.replications == 12
    assert comparison.p_value < 0.05
    assert comparison.a_lower


def test_random_does_not_beat_the_oracle(config):
    comparison = paired_comparison(config, 100, PolicyId.RANDOM, PolicyId.ORACLE_STAR)
    assert comparison.p_value > 0.5
    assert not comparison.a_lower


def test_identical_regrets_have_no_test(config):
    comparison = paired_comparison(config, 100, PolicyId.UCBF, PolicyId.UCBF)
    assert comparison.mean_difference == 0.0
    assert comparison.p_value is None
    assert not comparison.a_lower


def test_policies_must_be_configured(config):
    with pytest.raises(PreconditionError):
        paired_comparison(config, 100, PolicyId.ORACLE_STAR, PolicyId.ORACLE_DISCRETE)
