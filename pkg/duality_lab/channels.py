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
"""Kraus representations of the detector noise channels."""

from __future__ import annotations

import dataclasses
import enum
import logging
import typing

import numpy as np
import numpy.typing as npt

from .errors import DomainError, InvalidDensity, NonFiniteInput
from .qmat import (CHECK_TOL, ComplexArray, ComplexMat2, IDENTITY2,
                   PAULI_X, PAULI_Y, PAULI_Z,
                   as_matrix, dagger, hermiticity_defect, herm_eigvals)

log = logging.getLogger(__name__)

_KET0_BRA1: typing.Final = np.array([[0, 1], [0, 0]], dtype=np.complex128)
_PROJ0: typing.Final = np.array([[1, 0], [0, 0]], dtype=np.complex128)
_PROJ1: typing.Final = np.array([[0, 0], [0, 1]], dtype=np.complex128)


class ChannelKind(str, enum.Enum):
    """Detector noise models."""

    DC = "dc"
    ADC = "adc"
    PDC = "pdc"

    @classmethod
    def parse(cls, name: typing.Union[str, ChannelKind]) -> ChannelKind:
        """Get the channel kind named by a (case-insensitive) string."""
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise DomainError(f"channel must be one of {choices}, "
                              f"got {name!r}") from None


def check_gamma(gamma: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Validate noise strengths, returning them as a float array."""
    g = np.asarray(gamma, dtype=np.float64)
    if not np.all(np.isfinite(g)):
        raise NonFiniteInput(f"gamma must be finite, got {gamma}")
    if np.any((g < 0) | (g > 1)):
        bad = g[(g < 0) | (g > 1)].flat[0]
        raise DomainError(f"gamma must lie in [0, 1], got {bad}")
    return g


@dataclasses.dataclass(frozen=True)
class ChannelSpec:
    """A noise channel kind and its strength gamma."""

    kind: ChannelKind
    gamma: float

    def __post_init__(self) -> None:
        """Normalise the kind and validate gamma."""
        object.__setattr__(self, "kind", ChannelKind.parse(self.kind))
        object.__setattr__(self, "gamma", float(check_gamma(self.gamma)))


@dataclasses.dataclass(frozen=True)
class KrausSet:
    """Operator-sum representation of a channel."""

    ops: typing.Tuple[ComplexMat2, ...]

    def completeness_defect(self) -> float:
        """Get max |sum K^dagger K - I| over all entries."""
        total = sum((dagger(k) @ k for k in self.ops),
                    np.zeros((2, 2), dtype=np.complex128))
        return float(np.max(np.abs(total - IDENTITY2)))

    def __len__(self) -> int:
        """Get the number of operators."""
        return len(self.ops)


def kraus_stack(kind: ChannelKind, gamma: npt.ArrayLike) -> ComplexArray:
    """Build Kraus operators for an array of strengths.

    The result has shape ``(n_ops,) + gamma.shape + (2, 2)``.
    """
    g = check_gamma(gamma)[..., np.newaxis, np.newaxis]
    if kind is ChannelKind.DC:
        coeffs = [np.sqrt(1 - 0.75 * g)] + [np.sqrt(g) / 2] * 3
        mats = [IDENTITY2, PAULI_X, PAULI_Y, PAULI_Z]
        return np.stack([c * m for c, m in zip(coeffs, mats)])
    if kind is ChannelKind.ADC:
        k1 = _PROJ0 + np.sqrt(1 - g) * _PROJ1
        k2 = np.sqrt(g) * _KET0_BRA1
        return np.stack([k1, k2])
    if kind is ChannelKind.PDC:
        return np.stack([np.sqrt(1 - g) * IDENTITY2,
                         np.sqrt(g) * _PROJ0,
                         np.sqrt(g) * _PROJ1])
    raise DomainError(f"unsupported channel kind {kind!r}")


def kraus_ops(c: ChannelSpec) -> KrausSet:
    """Get the Kraus operators of a channel."""
    log.debug(f"building kraus operators for {c}")
    stack = kraus_stack(c.kind, c.gamma)
    return KrausSet(ops=tuple(stack[i] for i in range(stack.shape[0])))


def apply_batch(kind: ChannelKind,
                gamma: npt.ArrayLike,
                rho: npt.ArrayLike) -> ComplexMat2:
    """Apply a channel to a stack of states, broadcasting gamma and rho."""
    ops = kraus_stack(kind, gamma)
    states = as_matrix(rho)
    return typing.cast(ComplexMat2,
                       np.einsum("n...ij,...jk,n...lk->...il",
                                 ops, states, np.conj(ops)))


def check_density(rho: npt.ArrayLike, tol: float = CHECK_TOL) -> ComplexMat2:
    """Validate Hermiticity, unit trace and positivity within tol."""
    m = as_matrix(rho)
    defect = hermiticity_defect(m)
    if defect > tol:
        raise InvalidDensity(f"state is not Hermitian "
                             f"(max |rho - rho^dagger| = {defect:.3e})")
    trace = np.trace(m, axis1=-2, axis2=-1).real
    error = np.abs(trace - 1)
    if np.any(error > tol):
        worst = trace.flat[int(np.argmax(error))]
        raise InvalidDensity(f"state trace deviates from 1: {worst}")
    lowest = float(np.min(herm_eigvals(m, tol)[..., 1]))
    if lowest < -tol:
        raise InvalidDensity(f"state is not positive semidefinite "
                             f"(min eigenvalue {lowest:.3e})")
    return m


def apply(c: ChannelSpec, rho: npt.ArrayLike,
          tol: float = CHECK_TOL) -> ComplexMat2:
    """Apply a channel to a detector state: sum_i K_i rho K_i^dagger."""
    state = check_density(rho, tol)
    return apply_batch(c.kind, c.gamma, state)
