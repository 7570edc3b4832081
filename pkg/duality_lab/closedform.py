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
"""Registry of analytic complementarity expressions.

Each entry carries the parameter regime in which the expression was
derived (:class:`CaseConstraint`) so that it can be instantiated as an
engine scenario and compared numerically. Expressions are transcribed
term by term, without simplification, and accept unphysical noise
strengths.
"""

from __future__ import annotations

import dataclasses
import enum
import logging
import math
import typing

import numpy as np
import numpy.typing as npt

from .channels import ChannelKind
from .duality import ScenarioBatch
from .errors import MissingArgument, UnexpectedArgument, UnknownCase
from .qmat import FloatArray

log = logging.getLogger(__name__)

PI: typing.Final = math.pi

Real = typing.Union[float, FloatArray]
Formula = typing.Callable[..., FloatArray]

# sampling ranges of the canonical case variables
VARIABLE_RANGES: typing.Final[typing.Mapping[str, typing.Tuple[float,
                                                               float]]] = {
    "p1": (0.0, 1.0),
    "gamma": (0.0, 1.0),
    "theta": (0.0, PI),
    "phi": (0.0, 2 * PI),
    "eta1": (0.0, 2 * PI),
    "eta2": (0.0, 2 * PI),
    "deta": (0.0, 2 * PI),
    "dbeta": (0.0, 2 * PI),
    "ddelta": (0.0, 2 * PI),
    "alpha1": (0.0, 2 * PI),
    "alpha2": (0.0, 2 * PI),
}

DIRECT_VARIABLES: typing.Final = ("p1", "theta", "phi", "gamma",
                                  "alpha1", "alpha2", "eta1", "eta2")

ALPHAS: typing.Final = ("alpha1", "alpha2")


class CaseId(str, enum.Enum):
    """Identifiers of the registered closed forms."""

    DC_GENERAL = "DC_GENERAL"
    DC_CASE1 = "DC_CASE1"
    DC_CASE2 = "DC_CASE2"
    DC_CASE3 = "DC_CASE3"
    ADC_GENERAL = "ADC_GENERAL"
    ADC_CASE1 = "ADC_CASE1"
    ADC_CASE2 = "ADC_CASE2"
    ADC_CASE3 = "ADC_CASE3"
    ADC_CASE4 = "ADC_CASE4"
    ADC_CASE5 = "ADC_CASE5"
    PDC_GENERAL = "PDC_GENERAL"
    PDC_CASE1 = "PDC_CASE1"
    PDC_CASE2 = "PDC_CASE2"
    PDC_CASE2B = "PDC_CASE2B"
    PDC_CASE3 = "PDC_CASE3"
    PDC_CASE4 = "PDC_CASE4"
    ASYM_D_THETA = "ASYM_D_THETA"
    ASYM_D_PHI = "ASYM_D_PHI"

    @classmethod
    def parse(cls, name: typing.Union[str, CaseId]) -> CaseId:
        """Get the case id named by a string."""
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().upper())
        except ValueError:
            raise UnknownCase(f"no closed form registered as "
                              f"{name!r}") from None


@dataclasses.dataclass(frozen=True)
class CaseConstraint:
    """Fixed/free split of the parameters of a closed form.

    ``nuisance`` variables are absent from the expression but still
    enter the engine scenario; they are sampled during verification to
    exercise the claimed independence.
    """

    fixed: typing.Mapping[str, float]
    free: typing.Tuple[str, ...]
    nuisance: typing.Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        """Check the variable sets are disjoint and known."""
        names = list(self.fixed) + list(self.free) + list(self.nuisance)
        if len(names) != len(set(names)):
            raise ValueError(f"overlapping case variables: {names}")
        unknown = set(names) - set(VARIABLE_RANGES)
        if unknown:
            raise ValueError(f"unknown case variables: {sorted(unknown)}")

    @property
    def sampled(self) -> typing.Tuple[str, ...]:
        """Get the variables drawn at random during verification."""
        return self.free + self.nuisance

    def realize(self, values: typing.Mapping[str, npt.ArrayLike],
                ) -> typing.Dict[str, npt.ArrayLike]:
        """Map case variables to engine scenario parameters.

        Differences are realised with the subscript-1 angle held at its
        fixed (or sampled) value, zero by default, and the subscript-2
        angle set to ``angle1 - difference``.
        """
        merged: typing.Dict[str, npt.ArrayLike] = dict(self.fixed)
        merged.update(values)
        out = {name: merged[name] for name in DIRECT_VARIABLES
               if name in merged}
        if "deta" in merged:
            eta1 = np.asarray(merged.get("eta1", 0.0))
            out["eta1"] = eta1
            out["eta2"] = eta1 - np.asarray(merged["deta"])
        out["beta1"] = 0.0
        out["beta2"] = -np.asarray(merged.get("dbeta", 0.0))
        out["delta1"] = 0.0
        out["delta2"] = -np.asarray(merged.get("ddelta", 0.0))
        return out

    def batch(self, channel: ChannelKind,
              values: typing.Mapping[str, npt.ArrayLike]) -> ScenarioBatch:
        """Instantiate the matching engine scenarios."""
        return ScenarioBatch.build(channel, self.realize(values))


@dataclasses.dataclass(frozen=True)
class ClosedForm:
    """A registered analytic expression and its regime."""

    case_id: CaseId
    channel: ChannelKind
    quantity: str
    constraint: CaseConstraint
    formula: Formula
    general: typing.Optional[CaseId] = None
    tolerance_floor: float = 0.0


def _cos(x: npt.ArrayLike) -> FloatArray:
    return typing.cast(FloatArray, np.cos(np.asarray(x, dtype=np.float64)))


def _sin(x: npt.ArrayLike) -> FloatArray:
    return typing.cast(FloatArray, np.sin(np.asarray(x, dtype=np.float64)))


def dc_general(gamma: npt.ArrayLike, eta1: npt.ArrayLike,
               eta2: npt.ArrayLike, dbeta: npt.ArrayLike,
               ddelta: npt.ArrayLike) -> FloatArray:
    """Symmetric quanton under depolarizing noise."""
    g = np.asarray(gamma, dtype=np.float64)
    b = np.asarray(dbeta, dtype=np.float64)
    d = np.asarray(ddelta, dtype=np.float64)
    e1 = np.asarray(eta1, dtype=np.float64)
    e2 = np.asarray(eta2, dtype=np.float64)
    return (0.5 * ((2 + (1 - _cos(b + d)) * (g - 2) * g)
                   * _cos(e1 / 2) ** 2 * _cos(e2 / 2) ** 2
                   + (2 + (1 - _cos(b - d)) * (g - 2) * g)
                   * _sin(e1 / 2) ** 2 * _sin(e2 / 2) ** 2)
            + 0.5 * (g - 1) ** 2 * (1 - _cos(e1) * _cos(e2))
            - 0.25 * (g - 2) * g * ((_cos(b) + _cos(d))
                                    * _sin(e1) * _sin(e2)))


def dc_case1(gamma: npt.ArrayLike, deta: npt.ArrayLike) -> FloatArray:
    """Depolarizing noise, equal phases."""
    g = np.asarray(gamma, dtype=np.float64)
    return 1 - (2 * g - g ** 2) / 2 * (1 - _cos(deta))


def dc_case2(gamma: npt.ArrayLike, dbeta: npt.ArrayLike) -> FloatArray:
    """Depolarizing noise, eta1 = 0 and eta2 = pi/3."""
    g = np.asarray(gamma, dtype=np.float64)
    return 1 - (2 * g - g ** 2) / 8 * (5 - 3 * _cos(dbeta))


def dc_case3(deta: npt.ArrayLike, dbeta: npt.ArrayLike) -> FloatArray:
    """Depolarizing noise at gamma = 1/2 in the (deta, dbeta) plane."""
    return (7 + 3 * _cos(dbeta) * (1 + _cos(deta)) + 3 * _cos(deta)) / 16


def _adc_bracket(eta1: npt.ArrayLike, eta2: npt.ArrayLike,
                 dbeta: npt.ArrayLike, ddelta: npt.ArrayLike) -> FloatArray:
    c1, c2 = _cos(eta1), _cos(eta2)
    s1, s2 = _sin(eta1), _sin(eta2)
    cb, cd = _cos(dbeta), _cos(ddelta)
    return (c1 * c2 - (c1 + c2) * _sin(dbeta) * _sin(ddelta)
            + cd * s1 * s2
            + cb * (cd + cd * c1 * c2 + s1 * s2))


def adc_general(gamma: npt.ArrayLike, theta: npt.ArrayLike,
                eta1: npt.ArrayLike, eta2: npt.ArrayLike,
                dbeta: npt.ArrayLike, ddelta: npt.ArrayLike) -> FloatArray:
    """Symmetric quanton under amplitude damping."""
    g = np.asarray(gamma, dtype=np.float64)
    t = np.asarray(theta, dtype=np.float64)
    k = g * (g - 1)
    return (1 + 9 / 8 * k
            + k / 8 * (3 * _cos(2 * t) - 12 * _cos(t)
                       - 8 * _adc_bracket(eta1, eta2, dbeta, ddelta)
                       * _sin(t / 2) ** 4))


def adc_case1(gamma: npt.ArrayLike, theta: npt.ArrayLike) -> FloatArray:
    """Amplitude damping, eta1 = 0 and eta2 = pi."""
    g = np.asarray(gamma, dtype=np.float64)
    t = np.asarray(theta, dtype=np.float64)
    return 0.5 * (2 - (g - g ** 2) * (3 - 4 * _cos(t) + _cos(2 * t)))


def adc_case2(gamma: npt.ArrayLike, deta: npt.ArrayLike) -> FloatArray:
    """Amplitude damping with the detector prepared in |psi2>."""
    g = np.asarray(gamma, dtype=np.float64)
    return 1 - 2 * (g - g ** 2) * (1 - _cos(deta))


def adc_case3(gamma: npt.ArrayLike, dbeta: npt.ArrayLike) -> FloatArray:
    """Amplitude damping, ddelta = 2 pi."""
    g = np.asarray(gamma, dtype=np.float64)
    return 1 - (g - g ** 2) * (3 - _cos(dbeta))


def adc_case4(deta: npt.ArrayLike, dbeta: npt.ArrayLike) -> FloatArray:
    """Amplitude damping at gamma = 1/2 and theta = pi."""
    return _cos(np.asarray(dbeta) / 2) ** 2 * _cos(np.asarray(deta) / 2) ** 2


def adc_case5(deta: npt.ArrayLike, dbeta: npt.ArrayLike) -> FloatArray:
    """Amplitude damping at gamma = 1/2 and theta = pi/2."""
    return (13 + _cos(deta) + _cos(dbeta) * (1 + _cos(deta))) / 16


def _pdc_bracket(eta1: npt.ArrayLike, eta2: npt.ArrayLike,
                 dbeta: npt.ArrayLike, ddelta: npt.ArrayLike) -> FloatArray:
    c1, c2 = _cos(eta1), _cos(eta2)
    cb, cd = _cos(dbeta), _cos(ddelta)
    return ((c1 + c2) * _sin(dbeta) * _sin(ddelta)
            - c1 * c2 * (1 + cb * cd)
            - _sin(eta1) * _sin(eta2) * (cb + cd))


def pdc_general(gamma: npt.ArrayLike, theta: npt.ArrayLike,
                eta1: npt.ArrayLike, eta2: npt.ArrayLike,
                dbeta: npt.ArrayLike, ddelta: npt.ArrayLike) -> FloatArray:
    """Symmetric quanton under phase damping."""
    g = np.asarray(gamma, dtype=np.float64)
    t = np.asarray(theta, dtype=np.float64)
    k = g * (g - 2)
    return (1 + 3 / 8 * k
            - k / 8 * (3 * _cos(2 * t)
                       + _cos(dbeta) * _cos(ddelta) * (1 - _cos(2 * t))
                       - 2 * _sin(t) ** 2
                       * _pdc_bracket(eta1, eta2, dbeta, ddelta)))


def pdc_case1(gamma: npt.ArrayLike, theta: npt.ArrayLike) -> FloatArray:
    """Phase damping, eta1 = 0 and eta2 = pi."""
    g = np.asarray(gamma, dtype=np.float64)
    t = np.asarray(theta, dtype=np.float64)
    return 0.5 * (2 - (2 * g - g ** 2) * (1 - _cos(2 * t)))


def pdc_case2(gamma: npt.ArrayLike, deta: npt.ArrayLike) -> FloatArray:
    """Phase damping with theta = pi/2."""
    g = np.asarray(gamma, dtype=np.float64)
    return 1 - (2 * g - g ** 2) / 2 * (1 - _cos(deta))


def pdc_case2b(gamma: npt.ArrayLike, deta: npt.ArrayLike) -> FloatArray:
    """Phase damping with theta = pi/3."""
    g = np.asarray(gamma, dtype=np.float64)
    return 1 - 3 * (2 * g - g ** 2) / 8 * (1 - _cos(deta))


def pdc_case3(gamma: npt.ArrayLike, dbeta: npt.ArrayLike) -> FloatArray:
    """Phase damping, ddelta = 2 pi and theta = pi/2."""
    g = np.asarray(gamma, dtype=np.float64)
    return 1 - (2 * g - g ** 2) / 4 * (3 - _cos(dbeta))


def pdc_case4(deta: npt.ArrayLike, dbeta: npt.ArrayLike) -> FloatArray:
    """Phase damping at gamma = 1/2 and theta = pi/2."""
    return (7 + 3 * _cos(deta) + 3 * (1 + _cos(deta)) * _cos(dbeta)) / 16


ASYM_PLATEAU: typing.Final = 0.5625
ASYM_THETA_PLATEAU: typing.Final = (0.12, 1.37)
ASYM_PHI_BRANCH: typing.Final = (0.98, 5.3)


def asym_d_theta(theta: npt.ArrayLike) -> FloatArray:
    """Squared distinguishability against theta at p1 = 1/8."""
    t = np.asarray(theta, dtype=np.float64)
    lower, upper = ASYM_THETA_PLATEAU
    curve = 0.003 * (204.1 - 4.1 * _cos(2 * t) - 51.73 * _sin(2 * t))
    return typing.cast(FloatArray,
                       np.where((lower <= t) & (t <= upper),
                                ASYM_PLATEAU, curve))


def asym_d_phi(phi: npt.ArrayLike) -> FloatArray:
    """Squared distinguishability against phi at p1 = 1/8."""
    p = np.asarray(phi, dtype=np.float64)
    lower, upper = ASYM_PHI_BRANCH
    curve = 0.006 * (107 - 28 * _cos(p) - 7 * _cos(2 * p))
    return typing.cast(FloatArray,
                       np.where((lower <= p) & (p <= upper),
                                curve, ASYM_PLATEAU))


_SYM: typing.Final = {"p1": 0.5}
_DC_NUISANCE: typing.Final = ("theta", "phi") + ALPHAS
_THETA_FREE_NUISANCE: typing.Final = ("phi",) + ALPHAS
_DETA_NUISANCE: typing.Final = ("eta1", "phi") + ALPHAS

# the printed asymmetric curves follow the opposite rotation sense of
# the second unitary: eta2 = -pi/2
_ASYM_FIXED: typing.Final = {"p1": 1 / 8, "gamma": 1 / 8,
                             "eta1": PI, "eta2": -PI / 2,
                             "dbeta": 2 * PI, "ddelta": PI}
ASYM_TOLERANCE: typing.Final = 5e-3


def _constraint(fixed: typing.Mapping[str, float],
                free: typing.Tuple[str, ...],
                nuisance: typing.Tuple[str, ...] = ()) -> CaseConstraint:
    return CaseConstraint(fixed={**_SYM, **fixed},
                          free=free, nuisance=nuisance)


_DC = ChannelKind.DC
_ADC = ChannelKind.ADC
_PDC = ChannelKind.PDC

REGISTRY: typing.Final[typing.Mapping[CaseId, ClosedForm]] = {
    entry.case_id: entry for entry in (
        ClosedForm(CaseId.DC_GENERAL, _DC, "F",
                   _constraint({}, ("gamma", "eta1", "eta2",
                                    "dbeta", "ddelta"), _DC_NUISANCE),
                   dc_general),
        ClosedForm(CaseId.DC_CASE1, _DC, "F",
                   _constraint({"dbeta": 0.0, "ddelta": 0.0},
                               ("gamma", "deta"),
                               ("eta1",) + _DC_NUISANCE),
                   dc_case1, general=CaseId.DC_GENERAL),
        ClosedForm(CaseId.DC_CASE2, _DC, "F",
                   _constraint({"eta1": 0.0, "eta2": PI / 3,
                                "ddelta": 0.0},
                               ("dbeta", "gamma"), _DC_NUISANCE),
                   dc_case2, general=CaseId.DC_GENERAL),
        ClosedForm(CaseId.DC_CASE3, _DC, "F",
                   _constraint({"ddelta": 0.0, "gamma": 0.5},
                               ("deta", "dbeta"),
                               ("eta1",) + _DC_NUISANCE),
                   dc_case3, general=CaseId.DC_GENERAL),
        ClosedForm(CaseId.ADC_GENERAL, _ADC, "F",
                   _constraint({}, ("gamma", "theta", "eta1", "eta2",
                                    "dbeta", "ddelta"),
                               _THETA_FREE_NUISANCE),
                   adc_general),
        ClosedForm(CaseId.ADC_CASE1, _ADC, "F",
                   _constraint({"dbeta": 0.0, "ddelta": 0.0,
                                "eta1": 0.0, "eta2": PI},
                               ("gamma", "theta"), _THETA_FREE_NUISANCE),
                   adc_case1, general=CaseId.ADC_GENERAL),
        ClosedForm(CaseId.ADC_CASE2, _ADC, "F",
                   _constraint({"dbeta": 0.0, "ddelta": 0.0, "theta": PI},
                               ("gamma", "deta"), _DETA_NUISANCE),
                   adc_case2, general=CaseId.ADC_GENERAL),
        ClosedForm(CaseId.ADC_CASE3, _ADC, "F",
                   _constraint({"ddelta": 2 * PI, "eta1": 0.0,
                                "eta2": PI / 2, "theta": PI},
                               ("gamma", "dbeta"), ("phi",) + ALPHAS),
                   adc_case3, general=CaseId.ADC_GENERAL),
        ClosedForm(CaseId.ADC_CASE4, _ADC, "F",
                   _constraint({"theta": PI, "ddelta": 0.0, "gamma": 0.5},
                               ("deta", "dbeta"), _DETA_NUISANCE),
                   adc_case4, general=CaseId.ADC_GENERAL),
        ClosedForm(CaseId.ADC_CASE5, _ADC, "F",
                   _constraint({"theta": PI / 2, "ddelta": 0.0,
                                "gamma": 0.5},
                               ("deta", "dbeta"), _DETA_NUISANCE),
                   adc_case5, general=CaseId.ADC_GENERAL),
        ClosedForm(CaseId.PDC_GENERAL, _PDC, "F",
                   _constraint({}, ("gamma", "theta", "eta1", "eta2",
                                    "dbeta", "ddelta"),
                               _THETA_FREE_NUISANCE),
                   pdc_general),
        ClosedForm(CaseId.PDC_CASE1, _PDC, "F",
                   _constraint({"dbeta": 0.0, "ddelta": 0.0,
                                "eta1": 0.0, "eta2": PI},
                               ("theta", "gamma"), _THETA_FREE_NUISANCE),
                   pdc_case1, general=CaseId.PDC_GENERAL),
        ClosedForm(CaseId.PDC_CASE2, _PDC, "F",
                   _constraint({"dbeta": 0.0, "ddelta": 0.0,
                                "theta": PI / 2},
                               ("gamma", "deta"), _DETA_NUISANCE),
                   pdc_case2, general=CaseId.PDC_GENERAL),
        ClosedForm(CaseId.PDC_CASE2B, _PDC, "F",
                   _constraint({"dbeta": 0.0, "ddelta": 0.0,
                                "theta": PI / 3},
                               ("gamma", "deta"), _DETA_NUISANCE),
                   pdc_case2b, general=CaseId.PDC_GENERAL),
        ClosedForm(CaseId.PDC_CASE3, _PDC, "F",
                   _constraint({"ddelta": 2 * PI, "eta1": 0.0,
                                "eta2": PI / 2, "theta": PI / 2},
                               ("gamma", "dbeta"), ("phi",) + ALPHAS),
                   pdc_case3, general=CaseId.PDC_GENERAL),
        ClosedForm(CaseId.PDC_CASE4, _PDC, "F",
                   _constraint({"ddelta": 0.0, "theta": PI / 2,
                                "gamma": 0.5},
                               ("deta", "dbeta"), _DETA_NUISANCE),
                   pdc_case4, general=CaseId.PDC_GENERAL),
        ClosedForm(CaseId.ASYM_D_THETA, _DC, "D2",
                   _constraint({**_ASYM_FIXED, "phi": PI / 8},
                               ("theta",), ALPHAS),
                   asym_d_theta, tolerance_floor=ASYM_TOLERANCE),
        ClosedForm(CaseId.ASYM_D_PHI, _DC, "D2",
                   _constraint({**_ASYM_FIXED, "theta": PI / 4},
                               ("phi",), ALPHAS),
                   asym_d_phi, tolerance_floor=ASYM_TOLERANCE),
    )
}


def closed_form(case_id: typing.Union[str, CaseId]) -> ClosedForm:
    """Get the registry entry for a case id."""
    return REGISTRY[CaseId.parse(case_id)]


def case_constraint(case_id: typing.Union[str, CaseId]) -> CaseConstraint:
    """Get the fixed/free parameter split of a case."""
    return closed_form(case_id).constraint


def _as_real(value: FloatArray) -> Real:
    array = np.asarray(value, dtype=np.float64)
    if array.ndim == 0:
        return float(array)
    return array


def eval_case(case_id: typing.Union[str, CaseId],
              args: typing.Optional[typing.Mapping[str,
                                                   npt.ArrayLike]] = None,
              **kwargs: npt.ArrayLike) -> Real:
    """Evaluate a closed form at its free variables.

    Arguments may be given as a mapping, as keywords, or both. Scalar
    arguments give a float; array arguments broadcast.
    """
    entry = closed_form(case_id)
    values: typing.Dict[str, npt.ArrayLike] = dict(args or {})
    values.update(kwargs)
    free = entry.constraint.free
    missing = [name for name in free if name not in values]
    if missing:
        raise MissingArgument(f"{entry.case_id.value} requires {missing}")
    extra = sorted(set(values) - set(free))
    if extra:
        raise UnexpectedArgument(f"{entry.case_id.value} does not take "
                                 f"{extra}; free variables are {free}")
    return _as_real(entry.formula(**{name: values[name] for name in free}))


def general_arguments(case_id: typing.Union[str, CaseId],
                      args: typing.Mapping[str, npt.ArrayLike],
                      ) -> typing.Dict[str, npt.ArrayLike]:
    """Translate a special case's arguments into its general form's."""
    entry = closed_form(case_id)
    if entry.general is None:
        raise UnknownCase(f"{entry.case_id.value} has no general form")
    general = closed_form(entry.general)
    realized = entry.constraint.realize(args)
    mapped: typing.Dict[str, npt.ArrayLike] = {
        "gamma": realized["gamma"],
        "eta1": realized.get("eta1", 0.0),
        "eta2": realized.get("eta2", 0.0),
        "dbeta": -np.asarray(realized["beta2"]),
        "ddelta": -np.asarray(realized["delta2"]),
    }
    if "theta" in general.constraint.free:
        mapped["theta"] = realized["theta"]
    return mapped
