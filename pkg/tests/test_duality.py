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
"""Tests for the numeric complementarity engine."""

from __future__ import annotations

import json
import math

from hypothesis import given, strategies as st

import numpy as np

import pytest

KINDS = ("dc", "adc", "pdc")
TWO_PI = 2 * math.pi

angles = st.floats(min_value=-TWO_PI, max_value=TWO_PI)


def _random_values(rng, size, **overrides):
    from duality_lab.duality import UNITARY_PARAMETERS
    values = {"p1": rng.uniform(0, 1, size),
              "theta": rng.uniform(0, math.pi, size),
              "phi": rng.uniform(0, TWO_PI, size),
              "gamma": rng.uniform(0, 1, size)}
    values.update({name: rng.uniform(0, TWO_PI, size)
                   for name in UNITARY_PARAMETERS})
    values.update(overrides)
    return values


def _scenario(channel="dc", **overrides):
    from duality_lab.duality import ScenarioParams
    values = {"channel": channel, "p1": 0.5, "theta": 0.9, "phi": 2.1,
              "gamma": 0.3, "eta1": 0.4, "eta2": 2.5, "beta2": -0.8,
              "delta2": -1.3}
    values.update(overrides)
    return ScenarioParams.from_mapping(values)


class TestUnitary:
    """Test cases for the interaction unitaries."""

    @given(angles, angles, angles, angles)
    def test_unitarity(self, alpha, beta, delta, eta):
        """Test U U^dagger = I."""
        from duality_lab.duality import UnitaryParams, build_unitary
        u = build_unitary(UnitaryParams(alpha, beta, delta, eta))
        assert np.allclose(u @ u.conj().T, np.eye(2), atol=1e-12)

    def test_identity(self):
        """Test all-zero angles give the identity."""
        from duality_lab.duality import UnitaryParams, build_unitary
        assert np.allclose(build_unitary(UnitaryParams()), np.eye(2),
                           atol=1e-15)

    def test_non_finite(self):
        """Test non-finite angles are rejected."""
        from duality_lab.duality import UnitaryParams
        from duality_lab.errors import NonFiniteInput
        with pytest.raises(NonFiniteInput, match="eta"):
            UnitaryParams(eta=math.inf)


class TestScenario:
    """Test cases for scenario construction."""

    def test_from_mapping(self):
        """Test flat names map onto the nested scenario."""
        s = _scenario("ADC", gamma=0.25)
        assert s.channel.kind.value == "adc"
        assert s.u2.eta == 2.5
        assert s.u1.beta == 0.0
        assert s.flat()["delta2"] == -1.3

    def test_batch_missing(self):
        """Test a batch without a required parameter is rejected."""
        from duality_lab.duality import ScenarioBatch
        from duality_lab.errors import DomainError
        with pytest.raises(DomainError, match="missing"):
            ScenarioBatch.build("dc", {"p1": 0.5, "theta": 0, "phi": 0})

    def test_batch_unknown(self):
        """Test a batch with an unknown parameter is rejected."""
        from duality_lab.duality import ScenarioBatch
        from duality_lab.errors import DomainError
        with pytest.raises(DomainError, match="unknown"):
            ScenarioBatch.build("dc", {"p1": 0.5, "theta": 0, "phi": 0,
                                       "gamma": 0, "deta": 1})

    @pytest.mark.parametrize(("name", "value"),
                             (("p1", 1.1), ("theta", 4.0), ("phi", -1.0),
                              ("gamma", 2.0)))
    def test_batch_range(self, name, value):
        """Test out-of-range batch values are rejected."""
        from duality_lab.duality import ScenarioBatch
        from duality_lab.errors import DomainError
        values = {"p1": 0.5, "theta": 0, "phi": 0, "gamma": 0}
        values[name] = np.array([0.1, value])
        with pytest.raises(DomainError):
            ScenarioBatch.build("dc", values)

    def test_batch_scenario(self):
        """Test a batch element converts back to a scenario."""
        s = _scenario()
        assert s.batch().scenario() == s


class TestEngine:
    """Test cases for the batch evaluator."""

    @pytest.mark.parametrize("kind", KINDS)
    def test_saturation(self, kind):
        """Test noiseless detectors saturate F = 1 for both measures."""
        from duality_lab.duality import ScenarioBatch, evaluate
        rng = np.random.default_rng(7)
        batch = ScenarioBatch.build(kind, _random_values(rng, 10_000,
                                                         gamma=0.0))
        report = evaluate(batch)
        assert np.max(np.abs(report.f_exact - 1)) <= 1e-12
        assert np.max(np.abs(report.f_bound - 1)) <= 1e-12

    @pytest.mark.parametrize("kind", KINDS)
    def test_ordering(self, kind):
        """Test P <= D_exact <= D_bound <= 1 and F <= 1."""
        from duality_lab.duality import ScenarioBatch, evaluate
        rng = np.random.default_rng(11)
        report = evaluate(ScenarioBatch.build(kind,
                                              _random_values(rng, 10_000)))
        tol = 1e-12
        assert np.all(report.predictability <= report.d_exact + tol)
        assert np.all(report.d_exact <= report.d_bound + tol)
        assert np.all(report.d_bound <= 1 + tol)
        assert np.all(report.f_exact <= report.f_bound + tol)
        assert np.all(report.f_bound <= 1 + tol)

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", KINDS)
    def test_ordering_large(self, kind):
        """Test the ordering over a large random batch."""
        from duality_lab.duality import ScenarioBatch, evaluate
        rng = np.random.default_rng(12)
        report = evaluate(ScenarioBatch.build(kind,
                                              _random_values(rng, 100_000)))
        tol = 1e-12
        assert np.all(report.predictability <= report.d_exact + tol)
        assert np.all(report.d_exact <= report.d_bound + tol)
        assert np.all(report.f_bound <= 1 + tol)

    @pytest.mark.parametrize("kind", KINDS)
    def test_alpha_invariance(self, kind):
        """Test global phases of the unitaries change nothing."""
        from duality_lab.duality import ScenarioBatch, evaluate
        rng = np.random.default_rng(3)
        values = _random_values(rng, 1000)
        shifted = dict(values, alpha1=values["alpha1"] + 1.7,
                       alpha2=rng.uniform(0, TWO_PI, 1000))
        a = evaluate(ScenarioBatch.build(kind, values))
        b = evaluate(ScenarioBatch.build(kind, shifted))
        assert np.allclose(a.f_exact, b.f_exact, atol=1e-12)
        assert np.allclose(a.f_bound, b.f_bound, atol=1e-12)

    def test_equal_unitaries(self):
        """Test identical unitaries leave only the predictability."""
        from duality_lab.duality import complementarity
        s = _scenario("pdc", p1=0.2, eta2=0.4, beta2=0.0, delta2=0.0)
        report = complementarity(s)
        assert math.isclose(report.d_exact, 0.6, abs_tol=1e-12)
        assert math.isclose(report.d_bound, 0.6, abs_tol=1e-12)
        assert math.isclose(report.predictability, 0.6, abs_tol=1e-12)

    @pytest.mark.parametrize("kind", KINDS)
    def test_coherence_from_joint_state(self, kind):
        """Test C equals the l1 coherence of the reduced quanton state."""
        from duality_lab.duality import coherence, joint_state
        from duality_lab.qmat import l1_coherence, partial_trace_detector
        s = _scenario(kind, p1=0.3)
        reduced = partial_trace_detector(joint_state(s))
        assert math.isclose(coherence(s), float(l1_coherence(reduced)),
                            abs_tol=1e-12)

    @pytest.mark.parametrize("kind", KINDS)
    def test_joint_state(self, kind):
        """Test the joint state is a density operator."""
        from duality_lab.duality import joint_state
        rho = joint_state(_scenario(kind, p1=0.7))
        assert rho.shape == (4, 4)
        assert math.isclose(np.trace(rho).real, 1, abs_tol=1e-12)
        assert np.allclose(rho, rho.conj().T, atol=1e-14)
        assert np.min(np.linalg.eigvalsh(rho)) >= -1e-12

    def test_noisy_detector(self):
        """Test the noisy detector state of the full DC channel."""
        from duality_lab.duality import noisy_detector_state
        rho = noisy_detector_state(_scenario(gamma=1.0))
        assert np.allclose(rho, np.eye(2) / 2, atol=1e-12)

    @pytest.mark.parametrize("measure", ("exact", "bound"))
    def test_continuity_near_full_noise(self, measure):
        """Test F is continuous as the DC detector becomes degenerate."""
        from duality_lab.duality import ScenarioBatch, evaluate
        rng = np.random.default_rng(5)
        values = _random_values(rng, 500)
        at_one = evaluate(ScenarioBatch.build(
            "dc", dict(values, gamma=1.0))).f(measure)
        for gap in (1e-6, 1e-9, 1e-11, 2e-12, 1e-13):
            near = evaluate(ScenarioBatch.build(
                "dc", dict(values, gamma=1.0 - gap))).f(measure)
            assert np.max(np.abs(near - at_one)) <= 4 * gap + 1e-12

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("theta", (0.0, math.pi))
    def test_pole_ignores_phi(self, kind, theta):
        """Test every report field ignores phi at the Bloch poles."""
        from duality_lab.duality import (REPORT_BATCH_FIELDS,
                                         ScenarioBatch, evaluate)
        report = evaluate(ScenarioBatch.build(
            kind, {"p1": 0.35, "theta": theta,
                   "phi": np.linspace(0, TWO_PI, 64), "gamma": 0.3,
                   "eta1": 0.4, "eta2": 2.5, "beta2": -0.8,
                   "delta2": -1.3}))
        for name in REPORT_BATCH_FIELDS:
            assert np.ptp(report.field(name)) <= 1e-12, name

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("p1", (0.0, 1.0))
    def test_certain_path(self, kind, p1):
        """Test a certain path gives C = 0 and D = P = F = 1."""
        from duality_lab.duality import complementarity
        report = complementarity(_scenario(kind, p1=p1))
        assert math.isclose(report.coherence, 0.0, abs_tol=1e-12)
        for value in (report.d_exact, report.d_bound,
                      report.predictability, report.f_exact,
                      report.f_bound):
            assert math.isclose(value, 1.0, abs_tol=1e-12)

    def test_dc_detector_invariance(self):
        """Test DC F_exact ignores the detector angles."""
        from duality_lab.duality import ScenarioBatch, evaluate
        theta = np.linspace(0, math.pi, 50)[:, np.newaxis]
        phi = np.linspace(0, TWO_PI, 50)[np.newaxis, :]
        report = evaluate(ScenarioBatch.build(
            "dc", {"p1": 0.5, "theta": theta, "phi": phi, "gamma": 0.4,
                   "eta1": 0.3, "eta2": 2.0, "beta2": -0.7,
                   "delta2": -1.1}))
        assert np.ptp(report.f_exact) <= 1e-10
        assert np.ptp(report.field("C2")) > 0.01
        assert np.ptp(report.field("D2_exact")) > 0.01

    def test_dc_case1_anchor(self):
        """Test the engine at gamma = 0.2 and deta = 1.68."""
        from duality_lab.duality import complementarity
        s = _scenario(gamma=0.2, eta1=0.0, eta2=-1.68, beta2=0.0,
                      delta2=0.0, theta=1.1, phi=4.0)
        assert math.isclose(complementarity(s).f_exact, 0.80038,
                            abs_tol=5e-5)

    def test_unknown_measure(self):
        """Test F rejects an unknown measure name."""
        from duality_lab.duality import evaluate
        from duality_lab.errors import DomainError
        with pytest.raises(DomainError, match="measure"):
            evaluate(_scenario().batch()).f("trace")

    def test_unknown_field(self):
        """Test field rejects an unknown column."""
        from duality_lab.duality import evaluate
        from duality_lab.errors import DomainError
        with pytest.raises(DomainError, match="unknown report field"):
            evaluate(_scenario().batch()).field("F")


class TestReport:
    """Test cases for single-scenario reports."""

    def test_wrappers(self):
        """Test the scalar wrappers agree with the report."""
        from duality_lab.duality import (complementarity, coherence,
                                         distinguishability_bound,
                                         distinguishability_exact,
                                         path_contrast)
        s = _scenario("adc", p1=0.35)
        report = complementarity(s)
        assert coherence(s) == report.coherence
        assert distinguishability_exact(s) == report.d_exact
        assert distinguishability_bound(s) == report.d_bound
        assert report.d_exact == pytest.approx(
            max(report.predictability, path_contrast(s)), abs=1e-12)
        assert report.f_exact == pytest.approx(
            report.coherence ** 2 + report.d_exact ** 2, abs=1e-15)

    def test_json(self):
        """Test the JSON record keeps the column order."""
        from duality_lab.duality import CSV_COLUMNS, complementarity
        record = json.loads(complementarity(_scenario()).to_json())
        assert tuple(record) == CSV_COLUMNS
        assert record["channel"] == "dc"
        assert record["eta2"] == 2.5

    def test_csv_row(self):
        """Test the CSV row formats floats with 17 digits."""
        from duality_lab.duality import CSV_COLUMNS, complementarity
        report = complementarity(_scenario())
        row = report.to_csv_row()
        assert len(row) == len(CSV_COLUMNS)
        assert row[CSV_COLUMNS.index("channel")] == "dc"
        assert float(row[CSV_COLUMNS.index("F_exact")]) == report.f_exact
