# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
import csv
import logging
import math

from typing import IO, Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from pydantic import BaseModel, ConfigDict

from ..config import settings
from ..models import ExperimentConfig
from ..policies.trace import PolicyId
from .parallel import map_tasks
from .trial import run_trial

CSV_HEADER = [
    'policy', 'N', 'T', 'K', 'p', 'regret_mean', 'regret_std', 'q10', 'q50', 'q90',
    'r_disc', 'r_opt', 'r_subopt', 'r_boundary', 'wall_ms',
]


class TrialSummary(NamedTuple):
    T: int
    K: int
    p: float
    regret: float
    r_disc: float
    r_opt: float
    r_subopt: float
    r_boundary: float
    wall_ms: float


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    policy: str
    N: int
    T: int
    K: int
    p: float
    regret_mean: float
    regret_std: float
    q10: float
    q50: float
    q90: float
    r_disc: float
    r_opt: float
    r_subopt: float
    r_boundary: float
    wall_ms: float
    replications: int
    error: Optional[str] = None


class SweepResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[SweepRow]
    summary: str = "mean"

    @property
    def errors(self) -> Dict[str, str]:
        return {"{}/N={}".format(row.policy, row.N): row.error for row in self.rows if row.error is not None}


def summarize_trial(config: ExperimentConfig, N: int, policy_id: str, rep: int) -> TrialSummary:
    result = run_trial(config, N, PolicyId(policy_id), rep)
    decomposition = result.decomposition
    return TrialSummary(
        T=result.T, K=result.K, p=result.p, regret=result.regret,
        r_disc=decomposition.r_disc, r_opt=decomposition.r_opt, r_subopt=decomposition.r_subopt,
        r_boundary=decomposition.r_boundary, wall_ms=result.wall_ms,
    )


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def aggregate_cell(policy_id: str, N: int, summaries: Sequence[TrialSummary]) -> SweepRow:
    """Reduce the trials of one (policy, N) cell, given in replication order."""
    regrets = np.array([summary.regret for summary in summaries], dtype=float)
    q10, q50, q90 = np.quantile(regrets, [0.1, 0.5, 0.9])
    first = summaries[0]
    return SweepRow(
        policy=policy_id,
        N=N,
        T=first.T,
        K=first.K,
        p=first.p,
        regret_mean=_mean(regrets.tolist()),
        regret_std=float(np.std(regrets, ddof=1)) if len(summaries) > 1 else 0.0,
        q10=float(q10),
        q50=float(q50),
        q90=float(q90),
        r_disc=_mean([summary.r_disc for summary in summaries]),
        r_opt=_mean([summary.r_opt for summary in summaries]),
        r_subopt=_mean([summary.r_subopt for summary in summaries]),
        r_boundary=_mean([summary.r_boundary for summary in summaries]),
        wall_ms=_mean([summary.wall_ms for summary in summaries]),
        replications=len(summaries),
    )


def failed_cell(config: ExperimentConfig, policy_id: str, N: int, error: BaseException) -> SweepRow:
    nan = float('nan')
    T = config.budget(N)
    return SweepRow(
        policy=policy_id, N=N, T=T, K=0, p=T / N, regret_mean=nan, regret_std=nan, q10=nan, q50=nan,
        q90=nan, r_disc=nan, r_opt=nan, r_subopt=nan, r_boundary=nan, wall_ms=nan,
        replications=0, error="{}: {}".format(type(error).__name__, error),
    )


def run_sweep(config: ExperimentConfig, threads: Optional[int] = None) -> SweepResult:
    """
    Run every (policy, N) cell of the configuration for `replications` trials and
    aggregate them. Rows are ordered by N, then by the configured policy order.

    A failing trial aborts its cell: the row carries the error and NaN statistics and
    the other cells are unaffected.
    """
    tasks = [
        (config, N, policy_id.value, rep)
        for N in config.N_grid
        for policy_id in config.policies
        for rep in range(config.replications)
    ]
    outcomes = map_tasks(summarize_trial, tasks, threads)

    rows: List[SweepRow] = []
    for start in range(0, len(tasks), config.replications):
        _, N, policy_id, _ = tasks[start]
        cell = outcomes[start:start + config.replications]
        failures = [outcome for outcome in cell if isinstance(outcome, BaseException)]
        if failures:
            logging.getLogger().warning("sweep cell %s N=%d failed", policy_id, N, exc_info=failures[0])
            rows.append(failed_cell(config, policy_id, N, failures[0]))
            continue
        row = aggregate_cell(policy_id, N, cell)
        logging.getLogger().info("sweep cell %s N=%d T=%d K=%d: regret %.6g", policy_id, N, row.T, row.K,
                                 row.regret_mean)
        rows.append(row)
    return SweepResult(rows=rows, summary=config.summary)


def format_float(value: float, digits: Optional[int] = None) -> str:
    digits = int(settings.experiments.float_digits) if digits is None else digits
    return '{:.{}g}'.format(value, digits)


def write_csv(result: SweepResult, stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in result.rows:
        values = row.model_dump()
        writer.writerow([
            format_float(values[name]) if isinstance(values[name], float) else values[name]
            for name in CSV_HEADER
        ])
