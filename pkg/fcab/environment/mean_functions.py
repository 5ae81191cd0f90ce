# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
# pylint: disable=too-few-public-methods
"""
Catalog of mean-reward functions m : [0,1]^d -> [0,1].

Every kind is a frozen pydantic model tagged by `kind`, so a description round-trips
through JSON. The one-dimensional kinds act on the coordinate average of a point when
d > 1.
"""
import json
import math

from typing import Annotated, Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np

from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, TypeAdapter, model_validator

from ..exceptions import DomainError


def as_points(points: Any) -> np.ndarray:
    """
    Normalise input to an array of shape (n, d). A one-dimensional array is read as n
    points of dimension 1.
    """
    array = np.asarray(points, dtype=float)
    if array.ndim == 0:
        return array.reshape(1, 1)
    if array.ndim == 1:
        return array.reshape(-1, 1)
    return array


class MeanFunctionBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    lipschitz_L: Optional[NonNegativeFloat] = None
    margin_Q: Optional[NonNegativeFloat] = None
    analytic_M: Optional[float] = Field(default=None, ge=0.0, le=1.0)

    def _profile(self, u: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _derived_lipschitz(self) -> float:
        raise NotImplementedError

    def evaluate(self, points: Any) -> np.ndarray:
        """
        Evaluate on an array of points, shape (n, d) or (n,) for d = 1.

        :returns: array of shape (n,) with values in [0, 1]
        """
        x = as_points(points)
        return self._profile(x.mean(axis=1))

    def knots(self) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        """
        Breakpoints and values of the profile when it is continuous piecewise linear,
        otherwise None.
        """
        return None

    def lipschitz_constant(self) -> float:
        if self.lipschitz_L is not None:
            return float(self.lipschitz_L)
        return self._derived_lipschitz()

    def describe(self) -> str:
        return json.dumps(self.model_dump(mode='json'), sort_keys=True)


class PiecewiseLinear(MeanFunctionBase):
    kind: Literal["piecewise_linear"] = "piecewise_linear"
    breakpoints: List[float]
    values: List[float]

    @model_validator(mode='after')
    def _check_breakpoints(self) -> 'PiecewiseLinear':
        if len(self.breakpoints) < 2 or len(self.breakpoints) != len(self.values):
            raise ValueError("breakpoints and values must have the same length, at least 2")
        if any(nxt <= cur for cur, nxt in zip(self.breakpoints[:-1], self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if self.breakpoints[0] != 0.0 or self.breakpoints[-1] != 1.0:
            raise ValueError("breakpoints must span [0, 1]")
        if any(v < 0.0 or v > 1.0 for v in self.values):
            raise ValueError("values must lie in [0, 1]")
        return self

    def _profile(self, u: np.ndarray) -> np.ndarray:
        return np.interp(u, self.breakpoints, self.values)

    def knots(self) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        return np.asarray(self.breakpoints, dtype=float), np.asarray(self.values, dtype=float)

    def _derived_lipschitz(self) -> float:
        xs, ys = self.knots()
        return float(np.max(np.abs(np.diff(ys) / np.diff(xs))))


class Sinusoid(MeanFunctionBase):
    kind: Literal["sinusoid"] = "sinusoid"
    amplitude: NonNegativeFloat
    frequency: float = Field(gt=0.0)
    offset: float

    @model_validator(mode='after')
    def _check_range(self) -> 'Sinusoid':
        if self.offset - self.amplitude < 0.0 or self.offset + self.amplitude > 1.0:
            raise ValueError("offset +/- amplitude must stay within [0, 1]")
        return self

    def _profile(self, u: np.ndarray) -> np.ndarray:
        return self.offset + self.amplitude * np.sin(2.0 * math.pi * self.frequency * u)

    def _derived_lipschitz(self) -> float:
        return 2.0 * math.pi * self.frequency * self.amplitude


class LowerBoundMember(MeanFunctionBase):
    """
    One member of the adversarial pair: linear with slopes +/- L_tilde, two bumps of
    half-width lb_half_width around 1-p, at the level 1/2 which is the threshold of
    both members.
    """
    kind: Literal["lower_bound_member"] = "lower_bound_member"
    role: Literal[0, 1]
    p: float = Field(gt=0.0, lt=1.0)
    lb_half_width: float = Field(gt=0.0)
    L_tilde: float = Field(gt=0.0, le=0.5)

    @model_validator(mode='after')
    def _check_window(self) -> 'LowerBoundMember':
        if not 0.0 < self.x0 < self.x1 < 1.0:
            raise ValueError("2 * lb_half_width must be smaller than min(p, 1 - p)")
        return self

    @property
    def x0(self) -> float:
        return 1.0 - self.p - 2.0 * self.lb_half_width

    @property
    def x1(self) -> float:
        return 1.0 - self.p + 2.0 * self.lb_half_width

    def _profile(self, u: np.ndarray) -> np.ndarray:
        x0, x1, delta, slope = self.x0, self.x1, self.lb_half_width, self.L_tilde
        centre = 1.0 - self.p
        sign = -1.0 if self.role == 0 else 1.0
        conditions = [
            u < x0,
            u < x0 + delta,
            u < centre,
            u < centre + delta,
            u < x1,
        ]
        branches = [
            0.5 - slope * (x0 - u),
            0.5 + sign * slope * (u - x0),
            0.5 + sign * slope * (centre - u),
            0.5 - sign * slope * (u - centre),
            0.5 - sign * slope * (x1 - u),
        ]
        return np.select(conditions, branches, default=0.5 + slope * (u - x1))

    def knots(self) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        centre = 1.0 - self.p
        xs = np.array([0.0, self.x0, self.x0 + self.lb_half_width, centre,
                       centre + self.lb_half_width, self.x1, 1.0])
        return xs, self._profile(xs)

    def _derived_lipschitz(self) -> float:
        return self.L_tilde


class Tabulated(MeanFunctionBase):
    """Values on a uniform grid over [0, 1], linearly interpolated."""
    kind: Literal["tabulated"] = "tabulated"
    values: List[float]

    @model_validator(mode='after')
    def _check_values(self) -> 'Tabulated':
        if len(self.values) < 2:
            raise ValueError("a tabulated function needs at least two grid values")
        if any(v < 0.0 or v > 1.0 for v in self.values):
            raise ValueError("values must lie in [0, 1]")
        return self

    def _grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, len(self.values))

    def _profile(self, u: np.ndarray) -> np.ndarray:
        return np.interp(u, self._grid(), self.values)

    def knots(self) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        return self._grid(), np.asarray(self.values, dtype=float)

    def _derived_lipschitz(self) -> float:
        return float(np.max(np.abs(np.diff(self.values)))) * (len(self.values) - 1)


class Constant(MeanFunctionBase):
    kind: Literal["constant"] = "constant"
    c: float = Field(ge=0.0, le=1.0)

    def _profile(self, u: np.ndarray) -> np.ndarray:
        return np.full(u.shape, self.c, dtype=float)

    def knots(self) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        return np.array([0.0, 1.0]), np.array([self.c, self.c])

    def _derived_lipschitz(self) -> float:
        return 0.0


MeanFunction = Annotated[
    Union[PiecewiseLinear, Sinusoid, LowerBoundMember, Tabulated, Constant],
    Field(discriminator='kind')
]

_MEAN_FUNCTION_ADAPTER: TypeAdapter = TypeAdapter(MeanFunction)


def load_mean_function(description: Union[str, Dict[str, Any]]) -> MeanFunctionBase:
    """
    Build a mean function from its JSON description (a string or a parsed dict).

    :raises pydantic.ValidationError: when the description does not match a known kind
    """
    if isinstance(description, str):
        return _MEAN_FUNCTION_ADAPTER.validate_json(description)
    return _MEAN_FUNCTION_ADAPTER.validate_python(description)


def dump_mean_function(f: MeanFunctionBase) -> Dict[str, Any]:
    return f.model_dump(mode='json')


def eval_mean(f: MeanFunctionBase, x: Union[float, Sequence[float]]) -> float:
    """
    Evaluate f at a single point of the unit cube.

    :param f: the mean function
    :param x: a scalar (d = 1) or a sequence of d coordinates
    :returns: m(x) in [0, 1]
    :raises DomainError: when x lies outside [0, 1]^d
    """
    point = np.asarray(x, dtype=float).reshape(1, -1)
    if np.any(point < 0.0) or np.any(point > 1.0) or np.any(np.isnan(point)):
        raise DomainError("Point {} lies outside the unit cube".format(x))
    return float(f.evaluate(point)[0])

