# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#

class BudgetUnreachableError(RuntimeError):
    pass

class PartitionError(RuntimeError):
    pass
