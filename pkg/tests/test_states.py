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
"""Tests for quanton and detector state constructors."""

from __future__ import annotations

import math

from hypothesis import given, strategies as st

import numpy as np

import pytest

thetas = st.floats(min_value=0, max_value=math.pi)
phis = st.floats(min_value=0, max_value=2 * math.pi)


class TestQuanton:
    """Test cases for the quanton state."""

    @pytest.mark.parametrize(("p1", "ket"),
                             ((0.5, (1 / math.sqrt(2), 1 / math.sqrt(2))),
                              (1.0, (1.0, 0.0)),
                              (1 / 8, (math.sqrt(1 / 8), math.sqrt(7 / 8)))))
    def test_quanton_ket(self, p1, ket):
        """Test sqrt(p1)|psi1> + sqrt(p2)|psi2>."""
        from duality_lab.states import QuantonSpec, quanton_ket
        assert np.allclose(quanton_ket(QuantonSpec(p1)), ket, atol=1e-15)

    def test_properties(self):
        """Test derived quanton properties."""
        from duality_lab.states import QuantonSpec
        q = QuantonSpec(1 / 8)
        assert q.p2 == 7 / 8
        assert q.predictability == 0.75
        assert not q.symmetric
        assert QuantonSpec(0.5).symmetric

    @pytest.mark.parametrize("p1", (-0.1, 1.5))
    def test_out_of_range(self, p1):
        """Test p1 outside [0, 1] is rejected."""
        from duality_lab.errors import DomainError
        from duality_lab.states import QuantonSpec
        with pytest.raises(DomainError, match="p1"):
            QuantonSpec(p1)

    def test_non_finite(self):
        """Test NaN probabilities are rejected."""
        from duality_lab.errors import NonFiniteInput
        from duality_lab.states import QuantonSpec
        with pytest.raises(NonFiniteInput):
            QuantonSpec(float("nan"))


class TestDetector:
    """Test cases for the detector state."""

    @pytest.mark.parametrize(("theta", "phi", "ket"),
                             ((0.0, 1.3, (1, 0)),
                              (math.pi, 0.7, (0, np.exp(0.7j))),
                              (math.pi / 2, math.pi / 2,
                               (1 / math.sqrt(2), 1j / math.sqrt(2)))))
    def test_detector_ket(self, theta, phi, ket):
        """Test cos(theta/2)|psi1> + exp(i phi) sin(theta/2)|psi2>."""
        from duality_lab.states import DetectorSpec, detector_ket
        assert np.allclose(detector_ket(DetectorSpec(theta, phi)), ket,
                           atol=1e-15)

    @pytest.mark.parametrize(("theta", "phi"),
                             ((-0.1, 0.0), (3.2, 0.0), (1.0, 6.3),
                              (1.0, -1.0)))
    def test_out_of_range(self, theta, phi):
        """Test angles outside their ranges are rejected."""
        from duality_lab.errors import DomainError
        from duality_lab.states import DetectorSpec
        with pytest.raises(DomainError):
            DetectorSpec(theta, phi)

    @given(thetas, phis)
    def test_perp(self, theta, phi):
        """Test (d0, d0_perp) is an orthonormal basis."""
        from duality_lab.states import (DetectorSpec, detector_basis,
                                        detector_perp_ket)
        d = DetectorSpec(theta, phi)
        basis = detector_basis(d)
        assert np.allclose(basis.conj().T @ basis, np.eye(2), atol=1e-12)
        assert np.array_equal(basis[:, 1], detector_perp_ket(d))

    @given(thetas, phis)
    def test_bloch_vector(self, theta, phi):
        """Test |d0><d0| sits on the Bloch sphere at (theta, phi)."""
        from duality_lab.states import (DetectorSpec, bloch_vector, density,
                                        detector_ket)
        r = bloch_vector(density(detector_ket(DetectorSpec(theta, phi))))
        expected = (math.sin(theta) * math.cos(phi),
                    math.sin(theta) * math.sin(phi),
                    math.cos(theta))
        assert np.allclose(r, expected, atol=1e-12)

    def test_phase_period(self):
        """Test phi and phi + 2 pi give the same projector."""
        from duality_lab.states import density, detector_kets
        a = density(detector_kets(1.2, 0.0))
        b = density(detector_kets(1.2, 2 * math.pi))
        assert np.allclose(a, b, atol=1e-15)


class TestDensity:
    """Test cases for rank-one density matrices."""

    @pytest.mark.parametrize(("ket", "rho"),
                             (((1, 0), np.diag([1, 0])),
                              ((1 / math.sqrt(2), 1 / math.sqrt(2)),
                               np.full((2, 2), 0.5))))
    def test_examples(self, ket, rho):
        """Test projectors of simple kets."""
        from duality_lab.states import density
        assert np.allclose(density(ket), rho, atol=1e-15)

    @given(thetas, phis)
    def test_pure(self, theta, phi):
        """Test the projector is Hermitian, idempotent and of unit trace."""
        from duality_lab.states import density, detector_kets
        rho = density(detector_kets(theta, phi))
        assert np.allclose(rho, rho.conj().T, atol=1e-15)
        assert np.allclose(rho @ rho, rho, atol=1e-12)
        assert math.isclose(np.trace(rho).real, 1, abs_tol=1e-12)

    def test_norm_error(self):
        """Test unnormalised kets are rejected."""
        from duality_lab.errors import NormError
        from duality_lab.states import density
        with pytest.raises(NormError):
            density((1, 1))
