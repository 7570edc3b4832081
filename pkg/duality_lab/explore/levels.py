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
"""Level-set and plateau location along a single parameter."""

from __future__ import annotations

import logging
import typing

import numpy as np
import numpy.typing as npt

import scipy.optimize

from .sweep import resolve_differences
from ..channels import ChannelKind
from ..closedform import CaseId, eval_case
from ..duality import ScenarioBatch, evaluate
from ..qmat import FloatArray

log = logging.getLogger(__name__)

DEFAULT_SAMPLES: typing.Final = 2049
XTOL: typing.Final = 1e-12

Interval = typing.Tuple[float, float]
Function = typing.Callable[[FloatArray], npt.ArrayLike]


def level_crossings(fn: Function, level: float,
                    lower: float, upper: float,
                    samples: int = DEFAULT_SAMPLES,
                    xtol: float = XTOL) -> typing.List[float]:
    """Find every point in [lower, upper] where fn crosses level.

    The interval is scanned on an even grid and each sign change is
    refined with Brent's method. Tangent touches between grid points are
    not reported.
    """
    x = np.linspace(lower, upper, samples)
    y = np.asarray(fn(x), dtype=np.float64) - level

    def shifted(t: float) -> float:
        return float(np.asarray(fn(np.array(t)), dtype=np.float64)) - level

    roots: typing.List[float] = []
    for i in range(samples - 1):
        if y[i] == 0.0:
            roots.append(float(x[i]))
        elif y[i] * y[i + 1] < 0.0:
            roots.append(float(scipy.optimize.brentq(shifted, x[i], x[i + 1],
                                                     xtol=xtol)))
    if y[-1] == 0.0:
        roots.append(float(x[-1]))
    log.debug(f"found {len(roots)} crossings of level {level} "
              f"in [{lower}, {upper}]")
    return roots


def case_level_crossings(case_id: typing.Union[str, CaseId],
                         level: float, variable: str,
                         lower: float, upper: float,
                         fixed: typing.Optional[typing.Mapping[str,
                                                               float]] = None,
                         samples: int = DEFAULT_SAMPLES,
                         ) -> typing.List[float]:
    """Solve closed form == level for one free variable."""
    args = dict(fixed or {})

    def fn(x: FloatArray) -> npt.ArrayLike:
        return eval_case(case_id, args, **{variable: x})

    return level_crossings(fn, level, lower, upper, samples)


def plateau_intervals(channel: typing.Union[str, ChannelKind],
                      template: typing.Mapping[str, float],
                      variable: str, lower: float, upper: float,
                      samples: int = DEFAULT_SAMPLES,
                      ) -> typing.List[Interval]:
    """Find where trace-norm distinguishability sits at its floor P.

    Along ``variable`` the eigenvalue gap of ``p1 rho_1 - p2 rho_2`` is
    compared with the predictability; D equals P wherever the gap does
    not exceed it.
    """
    kind = ChannelKind.parse(channel)

    def excess(x: FloatArray) -> FloatArray:
        values = {**template, variable: x}
        batch = ScenarioBatch.build(kind, resolve_differences(values))
        report = evaluate(batch)
        return typing.cast(FloatArray,
                           report.contrast - report.predictability)

    edges = [lower] + level_crossings(excess, 0.0, lower, upper,
                                      samples) + [upper]
    intervals: typing.List[Interval] = []
    for a, b in zip(edges[:-1], edges[1:]):
        if b <= a:
            continue
        if float(excess(np.array(0.5 * (a + b)))) <= 0.0:
            if intervals and intervals[-1][1] == a:
                intervals[-1] = (intervals[-1][0], b)
            else:
                intervals.append((a, b))
    return intervals
