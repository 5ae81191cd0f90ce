# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import hashlib

SEED_BYTES = 8


def derive_seed(master_seed: int, N: int, label: str, rep: int) -> int:
    """
    Stable 64-bit seed of one stream of one trial. Depends only on its arguments, so
    trials can run in any order and on any worker.
    """
    key = "{}:{}:{}:{}".format(master_seed, N, label, rep).encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=SEED_BYTES).digest(), 'little')
