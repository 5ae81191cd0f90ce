# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from .arms import ArmOrigin, ArmSet, grid_arms, sample_arms_uniform
from .instance import Instance, make_instance
from .lower_bound import InstancePair, bernoulli_kl, instance_kl, make_lower_bound_pair
from .mean_functions import (
    Constant, LowerBoundMember, MeanFunction, MeanFunctionBase, PiecewiseLinear, Sinusoid, Tabulated,
    dump_mean_function, eval_mean, load_mean_function
)
from .rewards import Bernoulli, ClippedGaussian, RewardModel, RewardModelBase, sample_reward, sample_rewards
from .threshold import compute_threshold_M, threshold_plateau
from .validators import ValidationReport, verify_margin, verify_weak_lipschitz
