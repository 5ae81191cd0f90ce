# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import argparse
import logging
import os
import sys

from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .config import settings
from .models import CliConfig, Subcommand
from .router import EXIT_CONFIG, EXIT_OK, dispatch

LOG_LEVELS = {
    'error': logging.ERROR,
    'warning': logging.WARNING,
    'info': logging.INFO,
    'debug': logging.DEBUG,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='fcab', description="Finite continuum-armed bandit experiments.")
    parser.add_argument('subcommand', choices=[str(subcommand) for subcommand in Subcommand])
    parser.add_argument('--config', required=True, type=Path, help="experiment file (JSON)")
    parser.add_argument('--out', default=Path('.'), type=Path, help="output directory")
    parser.add_argument('--seed', type=int, help="overrides the master seed of the experiment file")
    parser.add_argument('--threads', type=int, help="worker processes, 0 for every CPU")
    return parser


def configure_logging() -> None:
    level_name = os.environ.get('FCAB_LOG', settings.logging.level).lower()
    logging.basicConfig(
        level=LOG_LEVELS.get(level_name, logging.INFO),
        format='%(asctime)s %(levelname)s %(message)s',
        datefmt=settings.logging.datefmt
    )


def validate_startup(cli: CliConfig) -> None:
    if not cli.config_path.is_file():
        raise FileNotFoundError("File {} not found. Required for startup".format(cli.config_path))
    cli.output_dir.mkdir(parents=True, exist_ok=True)
    if not os.access(cli.output_dir, os.W_OK):
        raise PermissionError("Output directory {} is not writable".format(cli.output_dir))


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as usage_exit:
        # argparse exits 0 after --help and 2 on usage errors
        return EXIT_OK if usage_exit.code in (0, None) else EXIT_CONFIG
    configure_logging()

    try:
        cli = CliConfig(
            subcommand=args.subcommand,
            config_path=args.config,
            output_dir=args.out,
            seed=args.seed,
            threads=args.threads,
        )
        validate_startup(cli)
    except (ValidationError, OSError) as startup_error:
        logging.getLogger().error("%s", startup_error)
        return EXIT_CONFIG

    return dispatch(cli)


if __name__ == "__main__":
    sys.exit(main())
