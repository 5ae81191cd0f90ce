# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import json
import logging

from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

from .environment.lower_bound import make_lower_bound_pair
from .environment.mean_functions import MeanFunctionBase, dump_mean_function
from .environment.threshold import compute_threshold_M, threshold_plateau
from .environment.validators import verify_margin, verify_weak_lipschitz
from .exceptions import ConfigError, ParameterWindowError, PreconditionError
from .experiments.fitting import sweep_exponents
from .experiments.lower_bound import lower_bound_protocol
from .experiments.parallel import map_tasks
from .experiments.sweep import run_sweep, write_csv
from .experiments.trial import TrialResult, run_trial
from .models import CliConfig, ExperimentConfig, Subcommand, ValidationSettings, parse_config
from .output import atomic_writer, write_json

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2

TRIALS_FILE = "trials.jsonl"
SWEEP_FILE = "sweep.csv"
LOWER_BOUND_FILE = "lb_report.json"
VALIDATION_FILE = "validation.json"
TRACES_DIR = "traces"


def simulate(config: ExperimentConfig, cli: CliConfig) -> Path:
    tasks = [
        (config, N, policy_id, rep)
        for N in config.N_grid
        for policy_id in config.policies
        for rep in range(config.replications)
    ]
    results: List[Any] = map_tasks(run_trial, tasks, cli.threads)
    for result in results:
        if isinstance(result, BaseException):
            raise result

    path = cli.output_dir / TRIALS_FILE
    with atomic_writer(path) as stream:
        for result in results:
            stream.write(json_line(result.record()))

    if config.write_traces:
        for result in results:
            write_trace(cli.output_dir, result)
    return path


def json_line(record: Dict[str, Any]) -> str:
    return json.dumps(record) + '\n'


def write_trace(output_dir: Path, result: TrialResult) -> None:
    path = output_dir / TRACES_DIR / "{}-N{}-rep{}.jsonl".format(result.policy_id, result.N, result.rep)
    with atomic_writer(path) as stream:
        result.trace.write_jsonl(stream)


def sweep(config: ExperimentConfig, cli: CliConfig) -> Path:
    result = run_sweep(config, cli.threads)
    path = cli.output_dir / SWEEP_FILE
    with atomic_writer(path) as stream:
        write_csv(result, stream)

    for policy, fit in sweep_exponents(result).items():
        logging.getLogger().info("regret exponent %s: slope %.4f (r2 %.4f)", policy, fit.slope, fit.r2)
    for cell, error in result.errors.items():
        logging.getLogger().error("cell %s aborted: %s", cell, error)
    return path


def lowerbound(config: ExperimentConfig, cli: CliConfig) -> Path:
    if config.lower_bound is None:
        raise ConfigError("The lowerbound subcommand needs a lower_bound section",
                          [("$.lower_bound", "field required")])
    settings_lb = config.lower_bound
    report = lower_bound_protocol(
        N=settings_lb.N,
        p=settings_lb.p,
        L=settings_lb.L,
        alpha_lb=settings_lb.alpha_lb,
        policy_id=settings_lb.policy,
        replications=settings_lb.replications or config.replications,
        master_seed=config.master_seed,
        threads=cli.threads,
    )
    path = cli.output_dir / LOWER_BOUND_FILE
    write_json(path, report.model_dump())
    return path


def _validation_targets(config: ExperimentConfig,
                        validation: ValidationSettings) -> List[Tuple[str, MeanFunctionBase, float, float, float]]:
    """(name, function, p, L, Q) of every function to check."""
    target = validation.target or ("lower_bound_pair" if config.lower_bound is not None else "mean_function")
    if target == "lower_bound_pair":
        if config.lower_bound is None:
            raise ConfigError("Validating the lower-bound pair needs a lower_bound section",
                              [("$.lower_bound", "field required")])
        lb = config.lower_bound
        pair = make_lower_bound_pair(lb.p, lb.L, lb.alpha_lb, lb.N)
        Q = validation.Q or 6.0 * max(1.0 / lb.L, 2.0)
        L = validation.L or pair.L_tilde
        return [("m0", pair.m0, lb.p, L, Q), ("m1", pair.m1, lb.p, L, Q)]

    f = config.mean_function
    N = config.N_grid[0]
    p = validation.p or config.budget(N) / N
    Q = validation.Q or f.margin_Q
    if Q is None:
        raise ConfigError("The margin constant is unknown", [("$.validation.Q", "field required")])
    return [("mean_function", f, p, validation.L or f.lipschitz_constant(), Q)]


def validate(config: ExperimentConfig, cli: CliConfig) -> Path:
    validation = config.validation or ValidationSettings()
    entries = []
    for name, f, p, L, Q in _validation_targets(config, validation):
        dim = 1 if name in ("m0", "m1") else config.dim
        M = compute_threshold_M(f, p, dim=dim)
        weak_lipschitz = verify_weak_lipschitz(f, M, L, validation.grid, dim=dim)
        margin = verify_margin(f, M, Q, validation.eps_values, validation.grid, dim=dim)
        if not (weak_lipschitz.passed and margin.passed):
            logging.getLogger().warning("%s fails an assumption check (weak Lipschitz %s, margin %s)",
                                        name, weak_lipschitz.passed, margin.passed)
        entries.append({
            'name': name,
            'description': dump_mean_function(f),
            'p': p,
            'threshold_M': M,
            'plateau': threshold_plateau(f, M, dim=dim),
            'weak_lipschitz': weak_lipschitz.model_dump(),
            'margin': margin.model_dump(),
        })

    path = cli.output_dir / VALIDATION_FILE
    write_json(path, {
        'passed': all(entry['weak_lipschitz']['passed'] and entry['margin']['passed'] for entry in entries),
        'functions': entries,
    })
    return path


HANDLERS: Dict[Subcommand, Callable[[ExperimentConfig, CliConfig], Path]] = {
    Subcommand.SIMULATE: simulate,
    Subcommand.SWEEP: sweep,
    Subcommand.LOWERBOUND: lowerbound,
    Subcommand.VALIDATE: validate,
}


def load_config(cli: CliConfig) -> ExperimentConfig:
    config = parse_config(cli.config_path)
    if cli.seed is not None:
        config = config.model_copy(update={'master_seed': cli.seed})
    return config


def dispatch(cli: CliConfig) -> int:
    """
    Run a subcommand and map its outcome to an exit code: 0 on success, 1 when the
    configuration is invalid or its lower-bound parameters leave the admissible window,
    2 on any other error.
    """
    try:
        config = load_config(cli)
    except (ConfigError, PreconditionError) as config_error:
        logging.getLogger().error("%s", config_error)
        return EXIT_CONFIG

    logging.getLogger().info("%s: config %s, output %s", cli.subcommand, cli.config_path, cli.output_dir)
    try:
        path = HANDLERS[cli.subcommand](config, cli)
    except (ConfigError, ParameterWindowError) as config_error:
        logging.getLogger().error("%s", config_error)
        return EXIT_CONFIG
    except Exception as runtime_error: # pylint: disable=broad-except
        logging.getLogger().error("%s failed: %s", cli.subcommand, runtime_error)
        logging.getLogger().debug("traceback", exc_info=runtime_error)
        return EXIT_RUNTIME

    logging.getLogger().info("wrote %s", path)
    return EXIT_OK
