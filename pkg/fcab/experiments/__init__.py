# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from .comparison import PairedComparison, paired_comparison
from .fitting import ExponentFit, fit_exponent, sweep_exponents
from .lower_bound import LBReport, lower_bound_protocol, regret_threshold
from .seeding import derive_seed
from .sweep import CSV_HEADER, SweepResult, SweepRow, run_sweep, write_csv
from .trial import TrialResult, build_instance, run_trial
