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
"""Grid evaluation of the complementarity engine."""

from __future__ import annotations

import dataclasses
import logging
import math
import typing

import numpy as np
import numpy.typing as npt

from .tables import Table
from ..channels import ChannelKind
from ..duality import (PARAMETERS, REPORT_BATCH_FIELDS, ReportBatch,
                       ScenarioBatch, evaluate)
from ..errors import InvalidAxis
from ..qmat import FloatArray
from ..utils import chunk_slices, ordered_map

log = logging.getLogger(__name__)

DIFFERENCES: typing.Final = ("deta", "dbeta", "ddelta")
SWEEP_PARAMETERS: typing.Final = PARAMETERS + DIFFERENCES
DEFAULT_OUTPUTS: typing.Final = ("C", "D_exact", "D_bound", "P",
                                 "F_exact", "F_bound")


@dataclasses.dataclass(frozen=True)
class Axis:
    """An evenly spaced, inclusive sweep axis."""

    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        """Validate the axis."""
        if self.name not in SWEEP_PARAMETERS:
            raise InvalidAxis(f"cannot sweep {self.name!r}; choose from "
                              f"{', '.join(SWEEP_PARAMETERS)}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise InvalidAxis(f"axis {self.name} bounds must be finite")
        if self.count < 2:
            raise InvalidAxis(f"axis {self.name} needs at least 2 points, "
                              f"got {self.count}")

    @classmethod
    def parse(cls, text: str) -> Axis:
        """Parse '<name>:<start>:<stop>:<count>'."""
        try:
            name, start, stop, count = text.split(":")
            return cls(name.strip(), float(start), float(stop), int(count))
        except ValueError as e:
            if isinstance(e, InvalidAxis):
                raise
            raise InvalidAxis(f"malformed axis {text!r}; expected "
                              f"<name>:<start>:<stop>:<count>") from None

    def values(self) -> FloatArray:
        """Get the grid points."""
        return np.linspace(self.start, self.stop, self.count)


def resolve_differences(values: typing.Mapping[str, npt.ArrayLike],
                        ) -> typing.Dict[str, npt.ArrayLike]:
    """Replace d<x> entries by x2 = x1 - d<x>, x1 defaulting to zero."""
    out = {name: value for name, value in values.items()
           if name not in DIFFERENCES}
    for diff in DIFFERENCES:
        if diff in values:
            base = diff[1:]
            first = np.asarray(values.get(f"{base}1", 0.0))
            out[f"{base}1"] = first
            out[f"{base}2"] = first - np.asarray(values[diff])
    return out


@dataclasses.dataclass(frozen=True)
class SweepSpec:
    """A scenario template and one or two axes over its holes."""

    channel: ChannelKind
    template: typing.Mapping[str, float]
    axes: typing.Tuple[Axis, ...]
    outputs: typing.Tuple[str, ...] = DEFAULT_OUTPUTS

    def __post_init__(self) -> None:
        """Check axes are distinct holes of the template."""
        object.__setattr__(self, "channel", ChannelKind.parse(self.channel))
        if not 1 <= len(self.axes) <= 2:
            raise InvalidAxis(f"a sweep takes 1 or 2 axes, "
                              f"got {len(self.axes)}")
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise InvalidAxis(f"duplicate sweep axes: {names}")
        unknown = sorted(set(self.template) - set(SWEEP_PARAMETERS))
        if unknown:
            raise InvalidAxis(f"unknown template parameters: {unknown}")
        for name in names:
            if name in self.template:
                raise InvalidAxis(f"axis {name} is fixed by the template")
            if name in DIFFERENCES and f"{name[1:]}2" in self.template:
                raise InvalidAxis(f"axis {name} conflicts with fixed "
                                  f"{name[1:]}2")
        bad = sorted(set(self.outputs) - set(REPORT_BATCH_FIELDS))
        if bad or not self.outputs:
            raise InvalidAxis(f"unknown sweep outputs: {bad}; choose from "
                              f"{', '.join(REPORT_BATCH_FIELDS)}")

    @property
    def size(self) -> int:
        """Get the number of grid points."""
        return math.prod(axis.count for axis in self.axes)

    def grid(self) -> typing.Dict[str, FloatArray]:
        """Get the flattened row-major grid, first axis outermost."""
        mesh = np.meshgrid(*(axis.values() for axis in self.axes),
                           indexing="ij")
        return {axis.name: m.reshape(-1) for axis, m in zip(self.axes, mesh)}

    def batch(self) -> ScenarioBatch:
        """Instantiate the flattened grid as a scenario batch."""
        values: typing.Dict[str, npt.ArrayLike] = dict(self.template)
        values.update(self.grid())
        return ScenarioBatch.build(self.channel, resolve_differences(values))


def evaluate_chunked(batch: ScenarioBatch,
                     workers: typing.Optional[int] = None) -> ReportBatch:
    """Evaluate a flat batch in independent chunks, keeping order."""
    flat = batch.flatten()
    slices = chunk_slices(flat.shape[0]) or [slice(0, 0)]
    parts = ordered_map(lambda sl: evaluate(flat[sl]), slices, workers)
    return ReportBatch(**{field.name: np.concatenate([getattr(part,
                                                              field.name)
                                                      for part in parts])
                          for field in dataclasses.fields(ReportBatch)})


def run_sweep(s: SweepSpec, workers: typing.Optional[int] = None) -> Table:
    """Evaluate the requested outputs at every grid point."""
    log.info(f"sweeping {s.channel.value} over "
             f"{' x '.join(f'{a.name}[{a.count}]' for a in s.axes)}")
    grid = s.grid()
    report = evaluate_chunked(s.batch(), workers)
    columns: typing.Dict[str, npt.ArrayLike] = dict(grid)
    for name in s.outputs:
        columns[name] = report.field(name)
    return Table.from_columns(columns)
