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
"""Closed-form linear algebra for single qubits and qubit pairs.

Every operation accepts a single matrix or a stack of matrices with the
matrix indices last, i.e. shapes ``(2, 2)`` or ``(..., 2, 2)`` (and
``(..., 4, 4)`` for joint states), and applies element-wise over the
leading axes.
"""

from __future__ import annotations

import dataclasses
import logging
import typing

import numpy as np
import numpy.typing as npt

from .errors import NonFiniteInput, NonHermitianInput

log = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]

ComplexMat2 = ComplexArray
ComplexMat4 = ComplexArray
Ket2 = ComplexArray

CHECK_TOL: typing.Final = 1e-10
IDENTITY_TOL: typing.Final = 1e-12
DEGENERACY_TOL: typing.Final = 1e-12
ALIGNMENT_TOL: typing.Final = 64 * float(np.finfo(np.float64).eps)

IDENTITY2: typing.Final = np.eye(2, dtype=np.complex128)
PAULI_X: typing.Final = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y: typing.Final = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z: typing.Final = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclasses.dataclass(frozen=True)
class EigenPair2:
    """Spectral decomposition of a (stack of) 2x2 Hermitian matrices.

    ``values[..., k]`` is the k-th eigenvalue in descending order and
    ``vectors[..., :, k]`` the matching unit eigenvector.
    """

    values: FloatArray
    vectors: ComplexArray

    def vector(self, k: int) -> Ket2:
        """Get the k-th eigenvector."""
        return self.vectors[..., :, k]


def as_matrix(entries: npt.ArrayLike, size: int = 2) -> ComplexArray:
    """Construct a complex matrix (stack) from array-like entries."""
    a = np.asarray(entries, dtype=np.complex128)
    if a.ndim < 2 or a.shape[-2:] != (size, size):
        raise ValueError(f"expected trailing shape ({size}, {size}), "
                         f"got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFiniteInput(f"matrix entries must be finite: {a!r}")
    return a


def dagger(a: ComplexArray) -> ComplexArray:
    """Get the conjugate transpose over the trailing two axes."""
    return typing.cast(ComplexArray, np.conj(np.swapaxes(a, -1, -2)))


def hermiticity_defect(a: ComplexArray) -> float:
    """Get the largest entry of |a - a^dagger| over the whole stack."""
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - dagger(a))))


def is_hermitian(a: ComplexArray, tol: float = CHECK_TOL) -> bool:
    """Check whether every matrix in the stack is Hermitian within tol."""
    return hermiticity_defect(a) <= tol


def _require_hermitian(a: ComplexArray, tol: float) -> None:
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NonHermitianInput(f"matrix is not Hermitian: "
                                f"max |a - a^dagger| = {defect:.3e} "
                                f"exceeds {tol:.1e}")


def _spectrum(a: ComplexArray) -> typing.Tuple[FloatArray, FloatArray]:
    # mean and half-gap of the two eigenvalues
    a00 = a[..., 0, 0].real
    a11 = a[..., 1, 1].real
    off = 0.5 * (a[..., 0, 1] + np.conj(a[..., 1, 0]))
    mean = 0.5 * (a00 + a11)
    half = np.hypot(0.5 * (a00 - a11), np.abs(off))
    return mean, half


def herm_eigen(a: npt.ArrayLike,
               preferred: typing.Optional[npt.ArrayLike] = None,
               tol: float = CHECK_TOL,
               degeneracy_tol: float = DEGENERACY_TOL) -> EigenPair2:
    """Decompose 2x2 Hermitian matrices in closed form.

    Where the two eigenvalues differ by no more than ``degeneracy_tol``
    the columns of ``preferred`` (default: the computational basis) are
    returned as eigenvectors. Where ``preferred`` already diagonalises
    the matrix to rounding precision its columns are returned in
    eigenvalue order.
    """
    m = as_matrix(a)
    _require_hermitian(m, tol)
    mean, half = _spectrum(m)
    skew = 0.5 * (m[..., 0, 0].real - m[..., 1, 1].real)
    off = 0.5 * (m[..., 0, 1] + np.conj(m[..., 1, 0]))
    values = np.stack([mean + half, mean - half], axis=-1)
    # two null vectors of (a - lambda_1); take the better conditioned one
    upper = np.stack([half + skew, np.conj(off)], axis=-1)
    lower = np.stack([off, half - skew], axis=-1)
    lead = np.where((skew >= 0)[..., np.newaxis], upper, lower)
    norm = np.linalg.norm(lead, axis=-1, keepdims=True)
    first = lead / np.where(norm > 0, norm, 1.0)
    second = np.stack([-np.conj(first[..., 1]), np.conj(first[..., 0])],
                      axis=-1)
    vectors = np.stack([first, second], axis=-1)
    if preferred is None:
        basis = np.broadcast_to(IDENTITY2, vectors.shape)
    else:
        basis = np.broadcast_to(as_matrix(preferred), vectors.shape)
    # near degeneracy the closed-form vectors inherit the rounding of
    # the entries; an aligned preferred basis is exact there
    rotated = dagger(basis) @ m @ basis
    aligned = (np.abs(rotated[..., 0, 1])
               <= ALIGNMENT_TOL * (np.abs(mean) + half))
    swapped = rotated[..., 0, 0].real < rotated[..., 1, 1].real
    ordered = np.where(swapped[..., np.newaxis, np.newaxis],
                       basis[..., ::-1], basis)
    vectors = np.where(aligned[..., np.newaxis, np.newaxis],
                       ordered, vectors)
    degenerate = (2.0 * half <= degeneracy_tol)[..., np.newaxis, np.newaxis]
    vectors = np.where(degenerate, basis, vectors)
    return EigenPair2(values=values.astype(np.float64),
                      vectors=vectors.astype(np.complex128))


def trace_norms(a: npt.ArrayLike, tol: float = CHECK_TOL) -> FloatArray:
    """Get the trace norm of every matrix in a stack of Hermitian 2x2s."""
    m = as_matrix(a)
    _require_hermitian(m, tol)
    mean, half = _spectrum(m)
    return typing.cast(FloatArray,
                       np.abs(mean + half) + np.abs(mean - half))


def trace_norm(a: npt.ArrayLike, tol: float = CHECK_TOL) -> float:
    """Get the trace norm (sum of absolute eigenvalues) of a 2x2."""
    m = as_matrix(a)
    if m.ndim != 2:
        raise ValueError(f"expected a single 2x2 matrix, got {m.shape}")
    return float(trace_norms(m, tol))


def kron(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMat4:
    """Get the tensor product a (x) b with the quanton factor first."""
    x = as_matrix(a)
    y = as_matrix(b)
    prod = np.einsum("...ij,...kl->...ikjl", x, y)
    return typing.cast(ComplexMat4, prod.reshape(prod.shape[:-4] + (4, 4)))


def partial_trace_detector(rho: npt.ArrayLike) -> ComplexMat2:
    """Trace out the second (detector) factor of a joint state."""
    m = as_matrix(rho, size=4)
    blocks = m.reshape(m.shape[:-2] + (2, 2, 2, 2))
    return typing.cast(ComplexMat2, np.einsum("...ikjk->...ij", blocks))


def l1_coherence(rho: npt.ArrayLike) -> FloatArray:
    """Get the l1-norm coherence |rho_12| + |rho_21| in the path basis."""
    m = as_matrix(rho)
    return typing.cast(FloatArray,
                       np.abs(m[..., 0, 1]) + np.abs(m[..., 1, 0]))


def herm_eigvals(a: npt.ArrayLike, tol: float = CHECK_TOL) -> FloatArray:
    """Get the eigenvalues of Hermitian 2x2s in descending order."""
    m = as_matrix(a)
    _require_hermitian(m, tol)
    mean, half = _spectrum(m)
    return np.stack([mean + half, mean - half], axis=-1)
