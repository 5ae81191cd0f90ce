# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import logging
import os

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

from ..config import settings


def resolve_threads(threads: Optional[int]) -> int:
    """Worker count: the configured default when unset, every CPU for 0."""
    if threads is None:
        threads = int(settings.experiments.threads)
    if threads == 0:
        return os.cpu_count() or 1
    return max(1, threads)


def map_tasks(function: Callable[..., Any], tasks: Sequence[Tuple[Any, ...]],
              threads: Optional[int] = None) -> List[Union[Any, BaseException]]:
    """
    Apply `function` to every argument tuple, serially or on a process pool.

    Results come back in task order whatever the completion order; a task that raised
    yields its exception instead of a result.
    """
    workers = min(resolve_threads(threads), max(1, len(tasks)))
    results: List[Union[Any, BaseException]] = []
    if workers == 1:
        for task in tasks:
            try:
                results.append(function(*task))
            except Exception as error: # pylint: disable=broad-except
                results.append(error)
        return results

    logging.getLogger().debug("running %d tasks on %d processes", len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(function, *task) for task in tasks]
        for future in futures:
            try:
                results.append(future.result())
            except Exception as error: # pylint: disable=broad-except
                results.append(error)
    return results
