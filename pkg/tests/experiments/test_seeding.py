# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from fcab.experiments import derive_seed


def test_seed_is_stable():
    assert derive_seed(42, 1000, "ucbf", 3) == derive_seed(42, 1000, "ucbf", 3)
    assert 0 <= derive_seed(42, 1000, "ucbf", 3) < 2 ** 64


def test_every_argument_changes_the_seed():
    base = derive_seed(42, 1000, "ucbf", 3)
    assert len({
        base,
        derive_seed(43, 1000, "ucbf", 3),
        derive_seed(42, 1001, "ucbf", 3),
        derive_seed(42, 1000, "random", 3),
        derive_seed(42, 1000, "ucbf", 4),
    }) == 5


def test_fields_do_not_run_together():
    assert derive_seed(1, 12, "ucbf", 3) != derive_seed(11, 2, "ucbf", 3)
