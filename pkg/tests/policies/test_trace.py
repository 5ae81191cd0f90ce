# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import io

import numpy as np
import pytest

from fcab.exceptions import TraceError
from fcab.policies import PolicyTrace, build_partition, ucbf_run


def test_records(step_instance):
    trace = ucbf_run(step_instance, build_partition(step_instance.arms, K=2), delta=0.01, seed=1)
    records = list(trace.records())
    assert [record['t'] for record in records] == [1, 2, 3, 4, 5, 6]
    assert records[1]['bin'] == 1
    assert set(records[0]) == {'t', 'bin', 'arm', 'reward'}


def test_jsonl(step_instance):
    trace = ucbf_run(step_instance, build_partition(step_instance.arms, K=2), delta=0.01, seed=1)
    stream = io.StringIO()
    trace.write_jsonl(stream)
    loaded = PolicyTrace.from_jsonl(stream.getvalue().splitlines(), trace.policy_id, trace.seed)
    np.testing.assert_array_equal(loaded.pulled, trace.pulled)
    np.testing.assert_array_equal(loaded.bins, trace.bins)


def test_duplicates_are_rejected():
    with pytest.raises(TraceError):
        PolicyTrace(pulled=np.array([1, 1]), rewards=np.array([0.0, 1.0]), policy_id="random", seed=0)


def test_pulled_mask():
    trace = PolicyTrace(pulled=np.array([3, 0]), rewards=np.array([1.0, 0.0]), policy_id="random", seed=0)
    assert trace.pulled_mask(5).tolist() == [True, False, False, True, False]
