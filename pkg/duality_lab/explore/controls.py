# Copyright (c) 2026 The duality-lab authors. All rights reserved.
#
# The contents of this file are licensed under the MIT License
# (the "License"); you may not use this file except in compliance with the
# License.
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations under
# the License.
"""Search for control parameters that keep F saturated under noise.

The objective of a control assignment is the worst value of F over a
(theta, phi) grid of detector preparations. Search runs in two stages:
an exhaustive coarse grid over the controls, followed by Nelder-Mead
refinement from the best coarse point.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import math
import typing

import numpy as np

import scipy.optimize

from .sweep import DIFFERENCES, resolve_differences
from ..channels import ChannelKind, ChannelSpec
from ..duality import (ScenarioBatch, ScenarioParams, UNITARY_PARAMETERS,
                       evaluate)
from ..errors import DomainError
from ..qmat import FloatArray
from ..states import QuantonSpec
from ..utils import ordered_map

log = logging.getLogger(__name__)

PI: typing.Final = math.pi
CONTROL_VARIABLES: typing.Final = DIFFERENCES + ("eta1", "eta2")
MEASURES: typing.Final = ("exact", "bound")
MIN_GRID_COUNT: typing.Final = 8
DEFAULT_GRID_COUNT: typing.Final = 64
DEFAULT_COARSE_COUNT: typing.Final = 12
DEFAULT_THRESHOLD: typing.Final = 0.9
SIMPLEX_XATOL: typing.Final = 1e-6
SIMPLEX_MAX_ITERATIONS: typing.Final = 500

Assignment = typing.Dict[str, float]


@dataclasses.dataclass(frozen=True)
class ControlSearchSpec:
    """What to optimise, at which noise, against which detector grid."""

    channel: ChannelSpec
    threshold: float = DEFAULT_THRESHOLD
    controls: typing.Tuple[str, ...] = ("deta", "dbeta")
    quanton: QuantonSpec = QuantonSpec(0.5)
    fixed: typing.Mapping[str, float] = dataclasses.field(
        default_factory=dict)
    theta_count: int = DEFAULT_GRID_COUNT
    phi_count: int = DEFAULT_GRID_COUNT
    coarse_count: int = DEFAULT_COARSE_COUNT
    measure: str = "exact"
    xatol: float = SIMPLEX_XATOL
    max_iterations: int = SIMPLEX_MAX_ITERATIONS

    def __post_init__(self) -> None:
        """Validate the search specification."""
        if not 0.0 < self.threshold <= 1.0:
            raise DomainError(f"threshold must lie in (0, 1], "
                              f"got {self.threshold}")
        self._check_variables()
        self._check_grids()

    def _check_variables(self) -> None:
        if not self.controls:
            raise DomainError("at least one control variable is required")
        unknown = sorted(set(self.controls) - set(CONTROL_VARIABLES))
        if unknown:
            raise DomainError(f"unknown control variables {unknown}; "
                              f"choose from {', '.join(CONTROL_VARIABLES)}")
        if len(set(self.controls)) != len(self.controls):
            raise DomainError(f"duplicate control variables: "
                              f"{list(self.controls)}")
        names = set(self.controls) | set(self.fixed)
        for diff in DIFFERENCES:
            if diff in names and f"{diff[1:]}2" in names:
                raise DomainError(f"{diff} and {diff[1:]}2 cannot both "
                                  f"be set")
        overlap = sorted(set(self.controls) & set(self.fixed))
        if overlap:
            raise DomainError(f"{overlap} are both fixed and controlled")
        allowed = set(CONTROL_VARIABLES) | set(UNITARY_PARAMETERS)
        bad = sorted(set(self.fixed) - allowed)
        if bad:
            raise DomainError(f"cannot fix {bad} in a control search")

    def _check_grids(self) -> None:
        for name, count in (("theta_count", self.theta_count),
                            ("phi_count", self.phi_count)):
            if count < MIN_GRID_COUNT:
                raise DomainError(f"{name} must be at least "
                                  f"{MIN_GRID_COUNT}, got {count}")
        if self.coarse_count < 2:
            raise DomainError(f"coarse_count must be at least 2, "
                              f"got {self.coarse_count}")
        if self.measure not in MEASURES:
            raise DomainError(f"measure must be one of {MEASURES}, "
                              f"got {self.measure!r}")

    def theta_grid(self) -> FloatArray:
        """Get the theta samples, both poles included."""
        return np.linspace(0.0, PI, self.theta_count)

    def phi_grid(self) -> FloatArray:
        """Get the phi samples over one period."""
        return np.linspace(0.0, 2 * PI, self.phi_count, endpoint=False)


@dataclasses.dataclass(frozen=True)
class GridMinimum:
    """Worst F over the detector grid and where it occurs."""

    value: float
    theta: float
    phi: float


def _unitaries(spec: ControlSearchSpec,
               assignment: typing.Mapping[str, float],
               ) -> typing.Dict[str, typing.Any]:
    return resolve_differences({**spec.fixed, **assignment})


def grid_minimum(spec: ControlSearchSpec,
                 assignment: typing.Mapping[str, float]) -> GridMinimum:
    """Evaluate the worst F of an assignment over the (theta, phi) grid."""
    theta = spec.theta_grid()
    phi = spec.phi_grid()
    values = {"p1": spec.quanton.p1,
              "gamma": spec.channel.gamma,
              "theta": theta[:, np.newaxis],
              "phi": phi[np.newaxis, :],
              **_unitaries(spec, assignment)}
    batch = ScenarioBatch.build(spec.channel.kind, values)
    f = evaluate(batch).f(spec.measure)
    i, j = np.unravel_index(int(np.argmin(f)), f.shape)
    return GridMinimum(value=float(f[i, j]),
                       theta=float(theta[i]), phi=float(phi[j]))


@dataclasses.dataclass(frozen=True)
class ControlResult:
    """Best control assignment found by a search."""

    spec: ControlSearchSpec
    assignment: Assignment
    min_f: float
    worst_theta: float
    worst_phi: float
    evaluations: int

    @property
    def threshold(self) -> float:
        """Get the threshold searched against."""
        return self.spec.threshold

    @property
    def met(self) -> bool:
        """Check whether the worst F reaches the threshold."""
        return self.min_f >= self.spec.threshold

    def scenario(self) -> ScenarioParams:
        """Get the worst-case scenario of the assignment."""
        values: typing.Dict[str, typing.Any] = {
            "channel": self.spec.channel.kind,
            "p1": self.spec.quanton.p1,
            "gamma": self.spec.channel.gamma,
            "theta": self.worst_theta,
            "phi": self.worst_phi,
        }
        values.update(_unitaries(self.spec, self.assignment))
        return ScenarioParams.from_mapping(values)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Get a JSON-serialisable representation."""
        return {"channel": self.spec.channel.kind.value,
                "gamma": self.spec.channel.gamma,
                "p1": self.spec.quanton.p1,
                "measure": self.spec.measure,
                "threshold": self.spec.threshold,
                "assignment": dict(self.assignment),
                "fixed": dict(self.spec.fixed),
                "min_f": self.min_f,
                "met": self.met,
                "worst": {"theta": self.worst_theta, "phi": self.worst_phi},
                "evaluations": self.evaluations}


def _coarse_points(spec: ControlSearchSpec) -> typing.List[Assignment]:
    axis = np.linspace(0.0, 2 * PI, spec.coarse_count, endpoint=False)
    return [dict(zip(spec.controls, map(float, point)))
            for point in itertools.product(axis, repeat=len(spec.controls))]


def find_controls(spec: ControlSearchSpec,
                  workers: typing.Optional[int] = None) -> ControlResult:
    """Maximise the worst-case F over the control variables.

    The search is deterministic: the coarse grid is fixed by the spec and
    the simplex starts from the first best coarse point in grid order.
    The assignment is returned whether or not the threshold is met.
    """
    log.info(f"searching {', '.join(spec.controls)} for "
             f"{spec.channel.kind.value} at gamma={spec.channel.gamma} "
             f"(threshold {spec.threshold}, measure {spec.measure})")
    points = _coarse_points(spec)
    minima = ordered_map(lambda point: grid_minimum(spec, point).value,
                         points, workers)
    best = int(np.argmax(minima))
    start = np.array([points[best][name] for name in spec.controls])
    log.info(f"best of {len(points)} coarse points: {points[best]} "
             f"with min F {minima[best]:.6f}")

    def objective(x: FloatArray) -> float:
        return -grid_minimum(spec, dict(zip(spec.controls,
                                            map(float, x)))).value

    step = 2 * PI / spec.coarse_count
    simplex = np.vstack([start] + [start + step * e
                                   for e in np.eye(len(start))])
    refined = scipy.optimize.minimize(objective, start,
                                      method="Nelder-Mead",
                                      options={"xatol": spec.xatol,
                                               "fatol": np.inf,
                                               "maxiter": spec.max_iterations,
                                               "initial_simplex": simplex})
    log.debug(f"simplex refinement: {refined.message} "
              f"after {refined.nit} iterations")
    if -float(refined.fun) > minima[best]:
        assignment = dict(zip(spec.controls, map(float, refined.x)))
    else:
        assignment = points[best]
    worst = grid_minimum(spec, assignment)
    result = ControlResult(spec=spec, assignment=assignment,
                           min_f=worst.value,
                           worst_theta=worst.theta, worst_phi=worst.phi,
                           evaluations=len(points) + int(refined.nfev) + 1)
    if result.met:
        log.info(f"found {assignment} with min F {worst.value:.6f}")
    else:
        log.warning(f"threshold {spec.threshold} not reached: best "
                    f"{assignment} gives min F {worst.value:.6f}")
    return result


@dataclasses.dataclass(frozen=True)
class TableRow:
    """One column of the published control-parameter table."""

    channel: ChannelKind
    gamma: float
    deta: float
    dbeta: float
    ddelta: float
    threshold: float = DEFAULT_THRESHOLD

    @property
    def assignment(self) -> Assignment:
        """Get the printed control values."""
        return {"deta": self.deta, "dbeta": self.dbeta,
                "ddelta": self.ddelta}


TABLE_ONE: typing.Final[typing.Tuple[TableRow, ...]] = (
    TableRow(ChannelKind.DC, 0.5, 0.5, 0.2, 0.0),
    TableRow(ChannelKind.ADC, 0.07, PI, 0.0, 0.0),
    TableRow(ChannelKind.PDC, 0.07, PI, 0.0, 0.0),
)


@dataclasses.dataclass(frozen=True)
class ControlAudit:
    """Worst-case F of a printed table column, for both measures."""

    row: TableRow
    minima: typing.Mapping[str, GridMinimum]

    @property
    def min_f(self) -> float:
        """Get the worst trace-norm F."""
        return self.minima["exact"].value

    @property
    def holds(self) -> bool:
        """Check the printed claim F >= threshold on the whole grid."""
        return self.min_f >= self.row.threshold

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Get a JSON-serialisable representation."""
        return {"channel": self.row.channel.value,
                "gamma": self.row.gamma,
                "assignment": self.row.assignment,
                "threshold": self.row.threshold,
                "holds": self.holds,
                "minima": {measure: dataclasses.asdict(m)
                           for measure, m in self.minima.items()}}


def audit_table_row(row: TableRow,
                    theta_count: int = DEFAULT_GRID_COUNT,
                    phi_count: int = DEFAULT_GRID_COUNT) -> ControlAudit:
    """Evaluate a printed table column on the detector grid."""
    minima = {}
    for measure in MEASURES:
        spec = ControlSearchSpec(channel=ChannelSpec(row.channel, row.gamma),
                                 threshold=row.threshold,
                                 controls=tuple(row.assignment),
                                 theta_count=theta_count,
                                 phi_count=phi_count,
                                 measure=measure)
        minima[measure] = grid_minimum(spec, row.assignment)
    audit = ControlAudit(row=row, minima=minima)
    if audit.holds:
        log.info(f"{row.channel.value} column holds: min F "
                 f"{audit.min_f:.4f}")
    else:
        worst = audit.minima["exact"]
        log.warning(f"{row.channel.value} column claims F >= "
                    f"{row.threshold} but min F is {audit.min_f:.4f} at "
                    f"theta={worst.theta:.4f}, phi={worst.phi:.4f}")
    return audit
