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
"""Numeric complementarity engine.

A scenario fixes the quanton path probabilities, the pure detector state,
the detector noise channel and the two path-conditioned unitaries. From
these the engine computes the coherence of the reduced quanton state, the
path distinguishability (both the trace-norm value and its spectral
upper bound), the predictability and the complementarity function
``F = C**2 + D**2`` for each distinguishability figure.

The single-scenario functions are thin wrappers over :func:`evaluate`,
which works on numpy batches of scenarios.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import math
import typing

import numpy as np
import numpy.typing as npt

from .channels import ChannelKind, ChannelSpec, apply_batch, check_gamma
from .errors import DomainError, NonFiniteInput
from .qmat import (ComplexMat2, ComplexMat4, DEGENERACY_TOL, FloatArray,
                   dagger, herm_eigen, herm_eigvals, kron)
from .states import (ANGLE_SLACK, DetectorSpec, QuantonSpec,
                     density, detector_bases)
from .utils import format_float

log = logging.getLogger(__name__)

UNITARY_PARAMETERS: typing.Final = ("alpha1", "beta1", "delta1", "eta1",
                                    "alpha2", "beta2", "delta2", "eta2")
REQUIRED_PARAMETERS: typing.Final = ("p1", "theta", "phi", "gamma")
PARAMETERS: typing.Final = REQUIRED_PARAMETERS + UNITARY_PARAMETERS

CSV_COLUMNS: typing.Final = ("p1", "theta", "phi", "channel", "gamma",
                             "eta1", "eta2", "beta1", "beta2",
                             "delta1", "delta2",
                             "C", "D_exact", "D_bound", "P",
                             "F_exact", "F_bound")
REPORT_FIELDS: typing.Final = ("C", "D_exact", "D_bound", "P",
                               "F_exact", "F_bound")

ScenarioValues = typing.Mapping[str, npt.ArrayLike]


@dataclasses.dataclass(frozen=True)
class UnitaryParams:
    """Angles of one path-conditioned detector unitary."""

    alpha: float = 0.0
    beta: float = 0.0
    delta: float = 0.0
    eta: float = 0.0

    def __post_init__(self) -> None:
        """Reject non-finite angles."""
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not math.isfinite(value):
                raise NonFiniteInput(f"{field.name} must be finite, "
                                     f"got {value}")


@dataclasses.dataclass(frozen=True)
class ScenarioParams:
    """A single point of the complementarity parameter space."""

    quanton: QuantonSpec
    detector: DetectorSpec
    channel: ChannelSpec
    u1: UnitaryParams = UnitaryParams()
    u2: UnitaryParams = UnitaryParams()

    @classmethod
    def from_mapping(cls, values: typing.Mapping[str, typing.Any],
                     ) -> ScenarioParams:
        """Construct from flat parameter names (p1, theta, eta2, ...)."""
        def unitary(i: int) -> UnitaryParams:
            return UnitaryParams(**{name: float(values.get(f"{name}{i}", 0))
                                    for name in ("alpha", "beta",
                                                 "delta", "eta")})
        return cls(quanton=QuantonSpec(float(values["p1"])),
                   detector=DetectorSpec(float(values["theta"]),
                                         float(values["phi"])),
                   channel=ChannelSpec(ChannelKind.parse(values["channel"]),
                                       float(values["gamma"])),
                   u1=unitary(1), u2=unitary(2))

    def flat(self) -> typing.Dict[str, float]:
        """Get the numeric parameters keyed by flat name."""
        values = {"p1": self.quanton.p1,
                  "theta": self.detector.theta,
                  "phi": self.detector.phi,
                  "gamma": self.channel.gamma}
        for i, u in ((1, self.u1), (2, self.u2)):
            values.update({f"alpha{i}": u.alpha, f"beta{i}": u.beta,
                           f"delta{i}": u.delta, f"eta{i}": u.eta})
        return values

    def batch(self) -> ScenarioBatch:
        """Get a zero-dimensional batch holding this scenario."""
        return ScenarioBatch.build(self.channel.kind, self.flat())


@dataclasses.dataclass(frozen=True)
class ScenarioBatch:
    """A broadcast array of scenarios sharing one channel kind."""

    channel: ChannelKind
    p1: FloatArray
    theta: FloatArray
    phi: FloatArray
    gamma: FloatArray
    alpha1: FloatArray
    beta1: FloatArray
    delta1: FloatArray
    eta1: FloatArray
    alpha2: FloatArray
    beta2: FloatArray
    delta2: FloatArray
    eta2: FloatArray

    @classmethod
    def build(cls, channel: typing.Union[str, ChannelKind],
              values: ScenarioValues) -> ScenarioBatch:
        """Broadcast and validate parameter arrays.

        ``p1``, ``theta``, ``phi`` and ``gamma`` are required; unitary
        angles default to zero.
        """
        missing = [name for name in REQUIRED_PARAMETERS
                   if name not in values]
        if missing:
            raise DomainError(f"missing scenario parameters: {missing}")
        unknown = sorted(set(values) - set(PARAMETERS))
        if unknown:
            raise DomainError(f"unknown scenario parameters: {unknown}")
        arrays = np.broadcast_arrays(*(np.asarray(values.get(name, 0.0),
                                                  dtype=np.float64)
                                       for name in PARAMETERS))
        fields = dict(zip(PARAMETERS, arrays))
        for name, array in fields.items():
            if not np.all(np.isfinite(array)):
                raise NonFiniteInput(f"{name} must be finite")
        _check_range("p1", fields["p1"], 0.0, 1.0, 0.0)
        _check_range("theta", fields["theta"], 0.0, math.pi, ANGLE_SLACK)
        _check_range("phi", fields["phi"], 0.0, 2 * math.pi, ANGLE_SLACK)
        check_gamma(fields["gamma"])
        return cls(channel=ChannelKind.parse(channel), **fields)

    @property
    def shape(self) -> typing.Tuple[int, ...]:
        """Get the broadcast shape of the batch."""
        return typing.cast(typing.Tuple[int, ...], self.p1.shape)

    def values(self) -> typing.Dict[str, FloatArray]:
        """Get the parameter arrays keyed by flat name."""
        return {name: getattr(self, name) for name in PARAMETERS}

    def flatten(self) -> ScenarioBatch:
        """Get a one-dimensional copy of the batch."""
        return dataclasses.replace(self, **{name: array.reshape(-1)
                                            for name, array
                                            in self.values().items()})

    def __getitem__(self, index: typing.Any) -> ScenarioBatch:
        """Select a sub-batch."""
        return dataclasses.replace(self, **{name: array[index]
                                            for name, array
                                            in self.values().items()})

    def scenario(self, index: typing.Tuple[int, ...] = ()) -> ScenarioParams:
        """Get the scenario at an index as a ScenarioParams."""
        values: typing.Dict[str, typing.Any] = {
            name: float(array[index])
            for name, array in self.values().items()}
        values["channel"] = self.channel
        return ScenarioParams.from_mapping(values)


def _check_range(name: str, array: FloatArray,
                 lower: float, upper: float, slack: float) -> None:
    outside = (array < lower - slack) | (array > upper + slack)
    if np.any(outside):
        raise DomainError(f"{name} must lie in [{lower:g}, {upper:g}], "
                          f"got {array[outside].flat[0]}")


@dataclasses.dataclass(frozen=True)
class ReportBatch:
    """Engine output for a ScenarioBatch."""

    coherence: FloatArray
    d_exact: FloatArray
    d_bound: FloatArray
    predictability: FloatArray
    contrast: FloatArray

    @property
    def f_exact(self) -> FloatArray:
        """Get C**2 + D_exact**2."""
        return typing.cast(FloatArray, self.coherence ** 2 + self.d_exact ** 2)

    @property
    def f_bound(self) -> FloatArray:
        """Get C**2 + D_bound**2."""
        return typing.cast(FloatArray, self.coherence ** 2 + self.d_bound ** 2)

    def f(self, measure: str = "exact") -> FloatArray:
        """Get F for the chosen distinguishability measure."""
        if measure == "exact":
            return self.f_exact
        if measure == "bound":
            return self.f_bound
        raise DomainError(f"measure must be 'exact' or 'bound', "
                          f"got {measure!r}")

    def field(self, name: str) -> FloatArray:
        """Get a report column by its serialised name."""
        getters: typing.Dict[str, typing.Callable[[], FloatArray]] = {
            "C": lambda: self.coherence,
            "C2": lambda: self.coherence ** 2,
            "D_exact": lambda: self.d_exact,
            "D2_exact": lambda: self.d_exact ** 2,
            "D_bound": lambda: self.d_bound,
            "D2_bound": lambda: self.d_bound ** 2,
            "P": lambda: self.predictability,
            "F_exact": lambda: self.f_exact,
            "F_bound": lambda: self.f_bound,
        }
        try:
            return getters[name]()
        except KeyError:
            raise DomainError(f"unknown report field {name!r}; "
                              f"choose from {sorted(getters)}") from None


REPORT_BATCH_FIELDS: typing.Final = ("C", "C2", "D_exact", "D2_exact",
                                     "D_bound", "D2_bound", "P",
                                     "F_exact", "F_bound")


def unitary_matrix(alpha: npt.ArrayLike, beta: npt.ArrayLike,
                   delta: npt.ArrayLike, eta: npt.ArrayLike) -> ComplexMat2:
    """Build interaction unitaries for arrays of angles."""
    a, b, d, e = np.broadcast_arrays(*(np.asarray(x, dtype=np.float64)
                                       for x in (alpha, beta, delta, eta)))
    c = np.cos(e / 2)
    s = np.sin(e / 2)
    u = np.empty(a.shape + (2, 2), dtype=np.complex128)
    u[..., 0, 0] = np.exp(1j * (a - b / 2 - d / 2)) * c
    u[..., 0, 1] = -np.exp(1j * (a - b / 2 + d / 2)) * s
    u[..., 1, 0] = np.exp(1j * (a + b / 2 - d / 2)) * s
    u[..., 1, 1] = np.exp(1j * (a + b / 2 + d / 2)) * c
    return u


def build_unitary(u: UnitaryParams) -> ComplexMat2:
    """Build the 2x2 interaction unitary for one path."""
    return unitary_matrix(u.alpha, u.beta, u.delta, u.eta)


def _noisy_detector(batch: ScenarioBatch,
                    ) -> typing.Tuple[ComplexMat2, ComplexMat2]:
    basis = detector_bases(batch.theta, batch.phi)
    rho0 = density(basis[..., :, 0])
    return apply_batch(batch.channel, batch.gamma, rho0), basis


def _unitaries(batch: ScenarioBatch,
               ) -> typing.Tuple[ComplexMat2, ComplexMat2]:
    return (unitary_matrix(batch.alpha1, batch.beta1,
                           batch.delta1, batch.eta1),
            unitary_matrix(batch.alpha2, batch.beta2,
                           batch.delta2, batch.eta2))


def evaluate(batch: ScenarioBatch,
             degeneracy_tol: float = DEGENERACY_TOL) -> ReportBatch:
    """Evaluate every duality quantity for a batch of scenarios."""
    rho, basis = _noisy_detector(batch)
    u1, u2 = _unitaries(batch)
    p1 = np.asarray(batch.p1)
    p2 = np.asarray(1.0 - p1)
    overlap = np.asarray(4.0 * p1 * p2)
    # spectral path: D_k and |d_k> of the noisy detector
    pair = herm_eigen(rho, preferred=basis, degeneracy_tol=degeneracy_tol)
    vecs = pair.vectors
    v = u2 @ dagger(u1)
    diag = np.einsum("...ik,...ij,...jk->...k", np.conj(vecs), v, vecs)
    coherence = np.sqrt(overlap) * np.abs(np.sum(pair.values * diag,
                                                 axis=-1))
    spread = np.clip(1.0 - overlap[..., np.newaxis] * np.abs(diag) ** 2,
                     0.0, None)
    d_bound = np.sum(pair.values * np.sqrt(spread), axis=-1)
    # trace-norm path: Helstrom operator p1 rho_1 - p2 rho_2
    rho1 = dagger(u1) @ rho @ u1
    rho2 = dagger(u2) @ rho @ u2
    helstrom = (p1[..., np.newaxis, np.newaxis] * rho1
                - p2[..., np.newaxis, np.newaxis] * rho2)
    eig = herm_eigvals(helstrom)
    return ReportBatch(coherence=coherence,
                       d_exact=np.sum(np.abs(eig), axis=-1),
                       d_bound=d_bound,
                       predictability=np.abs(p1 - p2),
                       contrast=eig[..., 0] - eig[..., 1])


def noisy_detector_state(s: ScenarioParams) -> ComplexMat2:
    """Get the detector state after the noise channel."""
    rho, _ = _noisy_detector(s.batch())
    return rho


def joint_state(s: ScenarioParams) -> ComplexMat4:
    """Build the combined quanton-detector state after the interaction."""
    batch = s.batch()
    rho, _ = _noisy_detector(batch)
    us = _unitaries(batch)
    probs = (s.quanton.p1, s.quanton.p2)
    joint = np.zeros((4, 4), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            path = np.zeros((2, 2), dtype=np.complex128)
            path[i, j] = math.sqrt(probs[i] * probs[j])
            joint += kron(path, dagger(us[i]) @ rho @ us[j])
    return joint


def _single(s: ScenarioParams) -> ReportBatch:
    return evaluate(s.batch())


def coherence(s: ScenarioParams) -> float:
    """Get the l1 coherence of the reduced quanton state."""
    return float(_single(s).coherence)


def distinguishability_exact(s: ScenarioParams) -> float:
    """Get the trace-norm path distinguishability."""
    return float(_single(s).d_exact)


def distinguishability_bound(s: ScenarioParams) -> float:
    """Get the spectral upper bound on path distinguishability."""
    return float(_single(s).d_bound)


def path_contrast(s: ScenarioParams) -> float:
    """Get the eigenvalue gap of p1 rho_1 - p2 rho_2.

    The trace-norm distinguishability is ``max(P, contrast)``; the
    contrast itself keeps varying where D sits on the predictability
    floor.
    """
    return float(_single(s).contrast)


@dataclasses.dataclass(frozen=True)
class DualityReport:
    """Coherence, distinguishability and complementarity at one point."""

    scenario: ScenarioParams
    coherence: float
    d_exact: float
    d_bound: float
    predictability: float
    f_exact: float
    f_bound: float

    def record(self) -> typing.Dict[str, typing.Union[str, float]]:
        """Get the flat record in serialisation column order."""
        flat = self.scenario.flat()
        values: typing.Dict[str, typing.Union[str, float]] = {
            "channel": self.scenario.channel.kind.value,
            "C": self.coherence,
            "D_exact": self.d_exact,
            "D_bound": self.d_bound,
            "P": self.predictability,
            "F_exact": self.f_exact,
            "F_bound": self.f_bound,
        }
        values.update(flat)
        return {column: values[column] for column in CSV_COLUMNS}

    def to_json(self) -> str:
        """Serialise as a flat JSON object."""
        return json.dumps(self.record())

    def to_csv_row(self) -> typing.List[str]:
        """Serialise as a CSV row in column order."""
        return [value if isinstance(value, str) else format_float(value)
                for value in self.record().values()]


def complementarity(s: ScenarioParams) -> DualityReport:
    """Evaluate the complementarity function and its ingredients."""
    r = _single(s)
    log.debug(f"evaluated scenario {s}")
    return DualityReport(scenario=s,
                         coherence=float(r.coherence),
                         d_exact=float(r.d_exact),
                         d_bound=float(r.d_bound),
                         predictability=float(r.predictability),
                         f_exact=float(r.f_exact),
                         f_bound=float(r.f_bound))
