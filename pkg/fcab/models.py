# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
"""
Schema of the JSON experiment files and of the command line.
"""
import json
import math

from enum import Enum
from pathlib import Path
from typing import Annotated, Any, List, Literal, Optional, Union

from pydantic import (
    BaseModel, ConfigDict, Field, NonNegativeInt, PositiveFloat, PositiveInt, ValidationError,
    field_validator, model_validator
)

from .environment.arms import ArmOrigin
from .environment.mean_functions import MeanFunction
from .environment.rewards import Bernoulli, RewardModel
from .exceptions import ConfigError
from .policies.trace import PolicyId

SCHEMA_VERSION = "fcab/1"
MIN_N = 30
MAX_SEED = 2 ** 64 - 1

Seed = Annotated[int, Field(ge=0, le=MAX_SEED)]


def round_half_up(value: float) -> int:
    # p * N carries representation error, 0.29 * 50 is 14.499999999999998
    return int(math.floor(round(value, 9) + 0.5))


class FixedP(BaseModel):
    """T = round(p N)."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    kind: Literal["fixed_p"] = "fixed_p"
    p: float = Field(gt=0.0, le=1.0)

    def budget(self, N: int) -> int:
        return min(N, max(1, round_half_up(self.p * N)))


class PowerLaw(BaseModel):
    """T = round(0.5 N^alpha), the regimes between the finite and the classical problem."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    kind: Literal["power_law"] = "power_law"
    alpha: float

    @field_validator('alpha')
    @classmethod
    def _check_alpha(cls, alpha: float) -> float:
        if not 2.0 / 3.0 < alpha <= 1.0:
            raise ValueError("alpha must lie in the window (2/3, 1], got {}".format(alpha))
        return alpha

    def budget(self, N: int) -> int:
        return min(N, max(1, round_half_up(0.5 * N ** self.alpha)))


Regime = Annotated[Union[FixedP, PowerLaw], Field(discriminator='kind')]


class KRuleKind(str, Enum):
    PAPER_DEFAULT = "paper_default"
    CAB_TUNED = "cab_tuned"
    EXPLICIT = "explicit"

    def __str__(self) -> str:
        return self.value


class KRule(BaseModel):
    """
    How UCBF chooses K: the F-CAB defaults, the continuum-armed tuning, or a fixed value.
    Written either as a plain string or as {"kind": "explicit", "K": 8}.
    """
    model_config = ConfigDict(frozen=True, extra='forbid')

    kind: KRuleKind = KRuleKind.PAPER_DEFAULT
    K: Optional[PositiveInt] = None

    @model_validator(mode='before')
    @classmethod
    def _from_string(cls, data: Any) -> Any:
        if isinstance(data, str):
            return {'kind': data}
        return data

    @model_validator(mode='after')
    def _check_k(self) -> 'KRule':
        if (self.kind == KRuleKind.EXPLICIT) != (self.K is not None):
            raise ValueError("K is required for, and only allowed with, the explicit rule")
        return self


class LowerBoundSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    N: PositiveInt
    p: float = Field(gt=0.0, lt=1.0)
    L: PositiveFloat
    alpha_lb: float = Field(gt=0.0, le=0.5)
    policy: PolicyId = PolicyId.UCBF
    replications: Optional[PositiveInt] = None


class ValidationSettings(BaseModel):
    """
    Which function `validate` checks and with which constants. Unset constants come from
    the function itself (its declared L and Q) or from the regime.
    """
    model_config = ConfigDict(frozen=True, extra='forbid')

    target: Optional[Literal["mean_function", "lower_bound_pair"]] = None
    p: Optional[float] = Field(default=None, gt=0.0, le=1.0)
    L: Optional[PositiveFloat] = None
    Q: Optional[PositiveFloat] = None
    eps_values: List[Annotated[float, Field(gt=0.0, lt=1.0)]] = [0.01, 0.02, 0.05, 0.1]
    grid: int = Field(default=100000, ge=1000)


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid', populate_by_name=True)

    schema_version: Literal["fcab/1"] = Field(default=SCHEMA_VERSION, alias='schema')
    mean_function: MeanFunction
    reward_model: RewardModel = Bernoulli()
    policies: List[PolicyId] = Field(default=[PolicyId.UCBF], min_length=1)
    N_grid: List[Annotated[int, Field(ge=MIN_N)]] = Field(min_length=1)
    regime: Regime = FixedP(p=0.5)
    replications: PositiveInt = 1
    master_seed: Seed = 0
    K_rule: KRule = KRule()
    dim: PositiveInt = 1
    arms: ArmOrigin = ArmOrigin.UNIFORM_IID
    bin_means: Literal["quadrature", "empirical"] = "quadrature"
    summary: Literal["mean", "median"] = "mean"
    record_timing: bool = False
    write_traces: bool = False
    lower_bound: Optional[LowerBoundSettings] = None
    validation: Optional[ValidationSettings] = None

    @model_validator(mode='after')
    def _check_arms(self) -> 'ExperimentConfig':
        if self.arms == ArmOrigin.GRID and self.dim != 1:
            raise ValueError("grid arms are one-dimensional, got dim={}".format(self.dim))
        if len(set(self.policies)) != len(self.policies):
            raise ValueError("policies must not repeat")
        return self

    def budget(self, N: int) -> int:
        return self.regime.budget(N)


class Subcommand(str, Enum):
    SIMULATE = "simulate"
    SWEEP = "sweep"
    LOWERBOUND = "lowerbound"
    VALIDATE = "validate"

    def __str__(self) -> str:
        return self.value


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    config_path: Path
    output_dir: Path = Path(".")
    seed: Optional[Seed] = None
    # 0 means every available CPU
    threads: Optional[NonNegativeInt] = None


def json_path(location: Any) -> str:
    path = "$"
    for part in location:
        path += "[{}]".format(part) if isinstance(part, int) else ".{}".format(part)
    return path


def parse_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read and validate an experiment file.

    :param path: path of a JSON document
    :returns: the validated configuration with defaults filled in
    :raises ConfigError: listing (json path, message) for a missing file, malformed JSON
        or every schema violation
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError("Cannot read config", [(str(path), "file not found")])
    try:
        document = json.loads(path.read_text())
    except json.JSONDecodeError as decode_error:
        raise ConfigError("Cannot read config", [("$", "invalid JSON: {}".format(decode_error))]) from decode_error

    try:
        return ExperimentConfig.model_validate(document)
    except ValidationError as validation_error:
        errors = [(json_path(error['loc']), error['msg']) for error in validation_error.errors()]
        raise ConfigError("Invalid config {}".format(path), errors) from validation_error
