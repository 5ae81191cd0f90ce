# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from .baselines import baseline_random
from .exceptions import BudgetUnreachableError, PartitionError
from .oracles import oracle_discrete, oracle_star
from .parameters import PolicyParameters, cab_parameters, default_parameters, power_law_parameters
from .partition import BinPool, Partition, build_partition
from .trace import PolicyId, PolicyTrace
from .ucbf import UcbfState, ucbf_cab_run, ucbf_index, ucbf_run
