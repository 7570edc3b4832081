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
"""Initial quanton and detector states."""

from __future__ import annotations

import dataclasses
import logging
import math
import typing

import numpy as np
import numpy.typing as npt

from .errors import DomainError, NonFiniteInput, NormError
from .qmat import CHECK_TOL, ComplexMat2, FloatArray, Ket2

log = logging.getLogger(__name__)

ANGLE_SLACK: typing.Final = 1e-12


def _finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise NonFiniteInput(f"{name} must be finite, got {value}")
    return float(value)


def _in_range(name: str, value: float, lower: float, upper: float,
              slack: float = 0.0) -> None:
    if not (lower - slack <= value <= upper + slack):
        raise DomainError(f"{name} must lie in [{lower:g}, {upper:g}], "
                          f"got {value}")


@dataclasses.dataclass(frozen=True)
class QuantonSpec:
    """Path probabilities of the initial pure quanton."""

    p1: float

    def __post_init__(self) -> None:
        """Validate the path probability."""
        _in_range("p1", _finite("p1", self.p1), 0.0, 1.0)

    @property
    def p2(self) -> float:
        """Get the probability of the second path."""
        return 1.0 - self.p1

    @property
    def symmetric(self) -> bool:
        """Check whether both paths are equally likely."""
        return self.p1 == 0.5

    @property
    def predictability(self) -> float:
        """Get the a priori path bias |p1 - p2|."""
        return abs(self.p1 - self.p2)


@dataclasses.dataclass(frozen=True)
class DetectorSpec:
    """Bloch angles of the pure detector state before any noise."""

    theta: float
    phi: float

    def __post_init__(self) -> None:
        """Validate the Bloch angles."""
        _in_range("theta", _finite("theta", self.theta),
                  0.0, math.pi, ANGLE_SLACK)
        _in_range("phi", _finite("phi", self.phi),
                  0.0, 2 * math.pi, ANGLE_SLACK)


def quanton_ket(q: QuantonSpec) -> Ket2:
    """Construct sqrt(p1)|psi1> + sqrt(p2)|psi2>."""
    return np.array([math.sqrt(q.p1), math.sqrt(q.p2)],
                    dtype=np.complex128)


def detector_kets(theta: npt.ArrayLike, phi: npt.ArrayLike) -> Ket2:
    """Construct |d0> for arrays of Bloch angles."""
    t, p = np.broadcast_arrays(np.asarray(theta, dtype=np.float64),
                               np.asarray(phi, dtype=np.float64))
    return np.stack([np.cos(t / 2) + 0j,
                     np.exp(1j * p) * np.sin(t / 2)], axis=-1)


def detector_bases(theta: npt.ArrayLike, phi: npt.ArrayLike) -> ComplexMat2:
    """Construct the basis (|d0>, |d0_perp>) as matrix columns."""
    t, p = np.broadcast_arrays(np.asarray(theta, dtype=np.float64),
                               np.asarray(phi, dtype=np.float64))
    d0 = detector_kets(t, p)
    perp = np.stack([-np.exp(-1j * p) * np.sin(t / 2),
                     np.cos(t / 2) + 0j], axis=-1)
    return np.stack([d0, perp], axis=-1)


def detector_ket(d: DetectorSpec) -> Ket2:
    """Construct cos(theta/2)|psi1> + exp(i phi) sin(theta/2)|psi2>."""
    return detector_kets(d.theta, d.phi)


def detector_perp_ket(d: DetectorSpec) -> Ket2:
    """Construct the detector state orthogonal to |d0>."""
    return detector_bases(d.theta, d.phi)[..., :, 1]


def detector_basis(d: DetectorSpec) -> ComplexMat2:
    """Construct the preferred detector basis (|d0>, |d0_perp>)."""
    return detector_bases(d.theta, d.phi)


def density(k: npt.ArrayLike, tol: float = CHECK_TOL) -> ComplexMat2:
    """Form the projector |k><k| of a unit ket (or a stack of them)."""
    ket = np.asarray(k, dtype=np.complex128)
    if ket.shape[-1:] != (2,):
        raise ValueError(f"expected trailing shape (2,), got {ket.shape}")
    if not np.all(np.isfinite(ket)):
        raise NonFiniteInput(f"ket amplitudes must be finite: {ket!r}")
    norm = np.linalg.norm(ket, axis=-1)
    defect = float(np.max(np.abs(norm - 1.0))) if norm.size else 0.0
    if defect > tol:
        raise NormError(f"ket norm deviates from 1 by {defect:.3e}")
    return np.einsum("...i,...j->...ij", ket, np.conj(ket))


def bloch_vector(rho: npt.ArrayLike) -> FloatArray:
    """Get the Bloch vector (x, y, z) of a qubit density matrix."""
    m = np.asarray(rho, dtype=np.complex128)
    return np.stack([2 * m[..., 0, 1].real,
                     -2 * m[..., 0, 1].imag,
                     (m[..., 0, 0] - m[..., 1, 1]).real], axis=-1)
