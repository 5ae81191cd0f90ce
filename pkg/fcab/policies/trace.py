# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import json

from dataclasses import dataclass
from enum import Enum
from typing import IO, Iterable, Iterator, Optional

import numpy as np

from ..exceptions import TraceError


class PolicyId(str, Enum):
    UCBF = "ucbf"
    UCBF_CAB_K = "ucbf-cab-k"
    ORACLE_STAR = "oracle-star"
    ORACLE_DISCRETE = "oracle-discrete"
    RANDOM = "random"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PolicyTrace:
    """
    The arms pulled by one run, in pull order, with the observed rewards. `bins` holds the
    bin of each pull for bin-based policies.
    """
    pulled: np.ndarray
    rewards: np.ndarray
    policy_id: str
    seed: int
    bins: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        pulled = np.asarray(self.pulled, dtype=np.int64)
        rewards = np.asarray(self.rewards, dtype=float)
        if pulled.shape != rewards.shape:
            raise TraceError("pulled and rewards must have the same length")
        if np.unique(pulled).shape[0] != pulled.shape[0]:
            raise TraceError("a trace never pulls an arm twice")
        object.__setattr__(self, 'pulled', pulled)
        object.__setattr__(self, 'rewards', rewards)
        if self.bins is not None:
            object.__setattr__(self, 'bins', np.asarray(self.bins, dtype=np.int64))

    def __len__(self) -> int:
        return int(self.pulled.shape[0])

    def pulled_mask(self, n: int) -> np.ndarray:
        mask = np.zeros(n, dtype=bool)
        mask[self.pulled] = True
        return mask

    def records(self) -> Iterator[dict]:
        for t, (arm, reward) in enumerate(zip(self.pulled.tolist(), self.rewards.tolist()), start=1):
            yield {
                't': t,
                'bin': int(self.bins[t - 1]) if self.bins is not None else None,
                'arm': arm,
                'reward': reward,
            }

    def write_jsonl(self, stream: IO[str]) -> None:
        for record in self.records():
            stream.write(json.dumps(record) + '\n')

    @classmethod
    def from_jsonl(cls, lines: Iterable[str], policy_id: str, seed: int) -> 'PolicyTrace':
        records = [json.loads(line) for line in lines if line.strip()]
        if [record['t'] for record in records] != list(range(1, len(records) + 1)):
            raise TraceError("trace records must be numbered 1..T in order")
        bins = [record['bin'] for record in records]
        return cls(
            pulled=np.array([record['arm'] for record in records], dtype=np.int64),
            rewards=np.array([record['reward'] for record in records], dtype=float),
            policy_id=policy_id,
            seed=seed,
            bins=None if any(b is None for b in bins) else np.array(bins, dtype=np.int64),
        )
