# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from .bin_means import bin_mean, bin_means, empirical_bin_means
from .diagnostics import DiagnosticsReport, diagnostics, lower_bound_event
from .ordering import compute_f_hat, order_bins
from .regret import RegretDecomposition, regret_decompose, regret_total
