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
"""Datasets behind the published curves and contour maps."""

from __future__ import annotations

import dataclasses
import enum
import logging
import math
import typing

import numpy.typing as npt

from .sweep import Axis, SweepSpec, run_sweep
from .tables import Table
from ..channels import ChannelKind
from ..errors import InvalidAxis, UnknownFigure

log = logging.getLogger(__name__)

PI: typing.Final = math.pi

DEFAULT_CURVE_COUNT: typing.Final = 201
DEFAULT_CONTOUR_COUNT: typing.Final = 101

# quanton series of the curve figures: symmetric and p1 = 1/8
SERIES: typing.Final = (("s", 0.5), ("a", 1 / 8))

Range = typing.Tuple[str, float, float]


class FigureId(str, enum.Enum):
    """Figure datasets that can be generated."""

    FIG2A = "fig2a"
    FIG2B = "fig2b"
    FIG3A = "fig3a"
    FIG3B = "fig3b"
    FIG3C = "fig3c"
    FIG4A = "fig4a"
    FIG4B = "fig4b"
    FIG5A = "fig5a"
    FIG5B = "fig5b"
    FIG5C = "fig5c"
    FIG5D = "fig5d"
    FIG6A = "fig6a"
    FIG6B = "fig6b"
    FIG7A = "fig7a"
    FIG7B = "fig7b"
    FIG7C = "fig7c"
    FIG7D = "fig7d"

    @classmethod
    def parse(cls, name: typing.Union[str, FigureId]) -> FigureId:
        """Get the figure id named by a (case-insensitive) string."""
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise UnknownFigure(f"no dataset defined for figure "
                                f"{name!r}") from None


@dataclasses.dataclass(frozen=True)
class FigureSpec:
    """Parameter bindings of one figure panel.

    Curve panels have one axis and are evaluated for both quanton series;
    contour panels have two axes and a fixed quanton.
    """

    figure_id: FigureId
    channel: ChannelKind
    template: typing.Mapping[str, float]
    ranges: typing.Tuple[Range, ...]

    @property
    def is_curve(self) -> bool:
        """Check whether this is a one-axis curve panel."""
        return len(self.ranges) == 1

    def axes(self, count: int) -> typing.Tuple[Axis, ...]:
        """Build the sweep axes with count points each."""
        return tuple(Axis(name, lower, upper, count)
                     for name, lower, upper in self.ranges)


_CURVE_UNITARIES: typing.Final = {"eta1": PI, "eta2": PI / 2,
                                  "dbeta": 2 * PI, "ddelta": PI}
_THETA: typing.Final = ("theta", 0.0, PI)
_PHI: typing.Final = ("phi", 0.0, 2 * PI)
_GAMMA: typing.Final = ("gamma", 0.0, 1.0)
_DETA: typing.Final = ("deta", 0.0, 2 * PI)
_DBETA: typing.Final = ("dbeta", 0.0, 2 * PI)
_SYM: typing.Final = {"p1": 0.5}


def _curves(channel: ChannelKind, gamma: float,
            phi: float, theta: float,
            ids: typing.Tuple[FigureId, FigureId],
            ) -> typing.List[FigureSpec]:
    base = {**_CURVE_UNITARIES, "gamma": gamma}
    return [FigureSpec(ids[0], channel, {**base, "phi": phi}, (_THETA,)),
            FigureSpec(ids[1], channel, {**base, "theta": theta}, (_PHI,))]


def _damping_contours(channel: ChannelKind, theta: float,
                      ids: typing.Tuple[FigureId, ...],
                      ) -> typing.List[FigureSpec]:
    fixed_theta = {**_SYM, "theta": theta, "phi": 0.0}
    return [
        FigureSpec(ids[0], channel,
                   {**_SYM, "phi": 0.0, "dbeta": 0.0, "ddelta": 0.0,
                    "eta1": 0.0, "eta2": PI},
                   (_THETA, _GAMMA)),
        FigureSpec(ids[1], channel,
                   {**fixed_theta, "dbeta": 0.0, "ddelta": 0.0},
                   (_DETA, _GAMMA)),
        FigureSpec(ids[2], channel,
                   {**fixed_theta, "ddelta": 2 * PI,
                    "eta1": 0.0, "eta2": PI / 2},
                   (_DBETA, _GAMMA)),
        FigureSpec(ids[3], channel,
                   {**fixed_theta, "ddelta": 0.0, "gamma": 0.5},
                   (_DETA, _DBETA)),
    ]


_F = FigureId
FIGURES: typing.Final[typing.Mapping[FigureId, FigureSpec]] = {
    spec.figure_id: spec for spec in (
        _curves(ChannelKind.DC, 1 / 8, PI / 8, PI / 4,
                (_F.FIG2A, _F.FIG2B))
        + [FigureSpec(_F.FIG3A, ChannelKind.DC,
                      {**_SYM, "theta": 0.0, "phi": 0.0,
                       "dbeta": 0.0, "ddelta": 0.0},
                      (_DETA, _GAMMA)),
           FigureSpec(_F.FIG3B, ChannelKind.DC,
                      {**_SYM, "theta": 0.0, "phi": 0.0,
                       "eta1": 0.0, "eta2": PI / 3, "ddelta": 0.0},
                      (_DBETA, _GAMMA)),
           FigureSpec(_F.FIG3C, ChannelKind.DC,
                      {**_SYM, "theta": 0.0, "phi": 0.0,
                       "ddelta": 0.0, "gamma": 0.5},
                      (_DETA, _DBETA))]
        + _curves(ChannelKind.ADC, 1 / 4, 0.0, PI / 3,
                  (_F.FIG4A, _F.FIG4B))
        + _damping_contours(ChannelKind.ADC, PI,
                            (_F.FIG5A, _F.FIG5B, _F.FIG5C, _F.FIG5D))
        + _curves(ChannelKind.PDC, 1 / 4, 0.0, PI / 3,
                  (_F.FIG6A, _F.FIG6B))
        + _damping_contours(ChannelKind.PDC, PI / 2,
                            (_F.FIG7A, _F.FIG7B, _F.FIG7C, _F.FIG7D))
    )
}


def figure_spec(figure_id: typing.Union[str, FigureId]) -> FigureSpec:
    """Get the bindings of a figure panel."""
    return FIGURES[FigureId.parse(figure_id)]


def _curve_dataset(spec: FigureSpec, count: int, measure: str,
                   template: typing.Mapping[str, float],
                   workers: typing.Optional[int]) -> Table:
    axis = spec.axes(count)[0]
    columns: typing.Dict[str, npt.ArrayLike] = {axis.name: axis.values()}
    for label, p1 in SERIES:
        sweep = SweepSpec(spec.channel, {**template, "p1": p1}, (axis,),
                          outputs=("C2", f"D2_{measure}", f"F_{measure}"))
        table = run_sweep(sweep, workers)
        columns[f"C2_{label}"] = table.column("C2")
        columns[f"D2_{label}"] = table.column(f"D2_{measure}")
        columns[f"F_{label}"] = table.column(f"F_{measure}")
    return Table.from_columns(columns)


def figure_dataset(figure_id: typing.Union[str, FigureId],
                   count: typing.Optional[int] = None,
                   measure: str = "exact",
                   overrides: typing.Optional[typing.Mapping[str,
                                                             float]] = None,
                   workers: typing.Optional[int] = None) -> Table:
    """Generate the dataset of a figure panel.

    Curve panels give columns ``C2_s, D2_s, F_s, C2_a, D2_a, F_a`` for the
    symmetric and p1 = 1/8 quantons; contour panels give ``F`` on the
    row-major grid of their two axes. ``overrides`` replaces template
    bindings, e.g. to mirror the rotation sense of the second unitary.
    """
    spec = figure_spec(figure_id)
    if measure not in ("exact", "bound"):
        raise InvalidAxis(f"measure must be 'exact' or 'bound', "
                          f"got {measure!r}")
    template = {**spec.template, **(overrides or {})}
    if count is None:
        count = DEFAULT_CURVE_COUNT if spec.is_curve else \
            DEFAULT_CONTOUR_COUNT
    log.info(f"generating {spec.figure_id.value} dataset "
             f"({count} points per axis, {measure} distinguishability)")
    if spec.is_curve:
        return _curve_dataset(spec, count, measure, template, workers)
    table = run_sweep(SweepSpec(spec.channel, template, spec.axes(count),
                                outputs=(f"F_{measure}",)), workers)
    columns: typing.Dict[str, npt.ArrayLike] = {
        axis.name: table.column(axis.name) for axis in spec.axes(count)}
    columns["F"] = table.column(f"F_{measure}")
    return Table.from_columns(columns)
