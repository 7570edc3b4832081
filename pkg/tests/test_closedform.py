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
"""Tests for the closed-form complementarity registry."""

from __future__ import annotations

import math

import numpy as np

import pytest

PI = math.pi

SPECIAL_CASES = ("DC_CASE1", "DC_CASE2", "DC_CASE3",
                 "ADC_CASE1", "ADC_CASE2", "ADC_CASE3", "ADC_CASE4",
                 "ADC_CASE5",
                 "PDC_CASE1", "PDC_CASE2", "PDC_CASE2B", "PDC_CASE3",
                 "PDC_CASE4")
F_CASES = SPECIAL_CASES + ("DC_GENERAL", "ADC_GENERAL", "PDC_GENERAL")


def _draw(case_id, size, seed):
    from duality_lab.closedform import VARIABLE_RANGES, case_constraint
    rng = np.random.default_rng(seed)
    return {name: rng.uniform(*VARIABLE_RANGES[name], size)
            for name in case_constraint(case_id).sampled}


class TestRegistry:
    """Test cases for registry lookups and argument handling."""

    def test_ids(self):
        """Test every case id is registered exactly once."""
        from duality_lab.closedform import CaseId, REGISTRY
        assert set(REGISTRY) == set(CaseId)
        assert all(entry.case_id is case_id
                   for case_id, entry in REGISTRY.items())

    @pytest.mark.parametrize("name", ("dc_case1", " DC_CASE1 "))
    def test_parse(self, name):
        """Test case ids are case-insensitive."""
        from duality_lab.closedform import CaseId
        assert CaseId.parse(name) is CaseId.DC_CASE1

    def test_unknown_case(self):
        """Test unknown ids raise UnknownCase."""
        from duality_lab.closedform import eval_case
        from duality_lab.errors import UnknownCase
        with pytest.raises(UnknownCase):
            eval_case("DC_CASE9", gamma=0.1)

    def test_missing_argument(self):
        """Test missing free variables raise MissingArgument."""
        from duality_lab.closedform import eval_case
        from duality_lab.errors import MissingArgument
        with pytest.raises(MissingArgument, match="deta"):
            eval_case("DC_CASE1", gamma=0.1)

    def test_unexpected_argument(self):
        """Test fixed variables cannot be passed."""
        from duality_lab.closedform import eval_case
        from duality_lab.errors import UnexpectedArgument
        with pytest.raises(UnexpectedArgument, match="dbeta"):
            eval_case("DC_CASE1", gamma=0.1, deta=1.0, dbeta=0.0)

    def test_mapping_and_keywords(self):
        """Test arguments may mix a mapping and keywords."""
        from duality_lab.closedform import eval_case
        assert eval_case("DC_CASE1", {"gamma": 0.2}, deta=1.68) \
            == eval_case("DC_CASE1", gamma=0.2, deta=1.68)

    def test_broadcast(self):
        """Test array arguments broadcast and scalars give floats."""
        from duality_lab.closedform import eval_case
        out = eval_case("ADC_CASE4", deta=np.zeros((3, 1)),
                        dbeta=np.zeros(4))
        assert out.shape == (3, 4)
        assert isinstance(eval_case("ADC_CASE4", deta=0.0, dbeta=0.0),
                          float)

    @pytest.mark.parametrize(("case_id", "fixed", "free"),
                             (("DC_CASE2",
                               {"p1": 0.5, "eta1": 0.0, "eta2": PI / 3,
                                "ddelta": 0.0},
                               ("dbeta", "gamma")),
                              ("ADC_CASE4",
                               {"p1": 0.5, "theta": PI, "ddelta": 0.0,
                                "gamma": 0.5},
                               ("deta", "dbeta")),
                              ("PDC_CASE1",
                               {"p1": 0.5, "dbeta": 0.0, "ddelta": 0.0,
                                "eta1": 0.0, "eta2": PI},
                               ("theta", "gamma"))))
    def test_case_constraint(self, case_id, fixed, free):
        """Test the fixed and free split of selected cases."""
        from duality_lab.closedform import case_constraint
        constraint = case_constraint(case_id)
        assert dict(constraint.fixed) == fixed
        assert constraint.free == free

    def test_realize(self):
        """Test differences are realised against the first angle."""
        from duality_lab.closedform import case_constraint
        values = case_constraint("ADC_CASE2").realize(
            {"gamma": 0.3, "deta": 1.0, "eta1": 2.5, "phi": 0.0,
             "alpha1": 0.0, "alpha2": 0.0})
        assert values["eta1"] == 2.5
        assert math.isclose(values["eta2"], 1.5)
        assert values["beta2"] == 0.0
        assert values["theta"] == PI

    def test_overlapping_constraint(self):
        """Test a variable cannot be both fixed and free."""
        from duality_lab.closedform import CaseConstraint
        with pytest.raises(ValueError, match="overlapping"):
            CaseConstraint(fixed={"gamma": 0.5}, free=("gamma",))


class TestValues:
    """Test cases for known closed-form values."""

    @pytest.mark.parametrize(("case_id", "args", "expected", "tol"),
                             (("DC_CASE1", {"gamma": 0.2, "deta": 1.68},
                               0.80038, 5e-5),
                              ("DC_CASE3", {"deta": 0.5, "dbeta": 0.2},
                               0.947, 5e-4),
                              ("ADC_CASE1", {"gamma": 0.5, "theta": PI},
                               0.0, 1e-15),
                              ("ADC_CASE3", {"gamma": 0.5, "dbeta": PI},
                               0.0, 1e-15),
                              ("ADC_CASE5", {"deta": PI, "dbeta": 1.0},
                               0.75, 1e-15),
                              ("ADC_CASE4", {"deta": 0.0, "dbeta": 0.0},
                               1.0, 1e-15),
                              ("PDC_CASE2", {"gamma": 1.0, "deta": PI / 2},
                               0.5, 1e-15),
                              ("PDC_CASE2B",
                               {"gamma": 1.0, "deta": PI / 2},
                               0.625, 1e-15),
                              ("PDC_CASE2B", {"gamma": 1.0, "deta": 0.0},
                               1.0, 1e-15),
                              ("ASYM_D_THETA", {"theta": 0.5},
                               0.5625, 0.0),
                              ("ASYM_D_PHI", {"phi": 0.5},
                               0.5625, 0.0)))
    def test_anchor(self, case_id, args, expected, tol):
        """Test closed forms at quoted points."""
        from duality_lab.closedform import eval_case
        assert math.isclose(eval_case(case_id, args), expected,
                            abs_tol=tol)

    def test_dc_case1_is_pdc_case2(self):
        """Test DC_CASE1 and PDC_CASE2 share one expression."""
        from duality_lab.closedform import eval_case
        args = _draw("DC_CASE1", 1000, 1)
        free = {"gamma": args["gamma"], "deta": args["deta"]}
        assert np.array_equal(eval_case("DC_CASE1", free),
                              eval_case("PDC_CASE2", free))

    @pytest.mark.parametrize("case_id",
                             ("DC_GENERAL", "ADC_GENERAL", "PDC_GENERAL"))
    def test_general_noiseless(self, case_id):
        """Test every general form equals 1 without noise."""
        from duality_lab.closedform import case_constraint, eval_case
        draws = _draw(case_id, 1000, 2)
        args = {name: draws[name]
                for name in case_constraint(case_id).free}
        args["gamma"] = np.zeros(1000)
        assert np.allclose(eval_case(case_id, args), 1, atol=1e-12)

    @pytest.mark.parametrize("case_id", SPECIAL_CASES)
    def test_reduction(self, case_id):
        """Test special cases agree with their general forms."""
        from duality_lab.closedform import (case_constraint, closed_form,
                                            eval_case, general_arguments)
        draws = _draw(case_id, 1000, 3)
        args = {name: draws[name]
                for name in case_constraint(case_id).free}
        general = closed_form(case_id).general
        reduced = eval_case(general, general_arguments(case_id, args))
        assert np.allclose(eval_case(case_id, args), reduced, atol=1e-12)

    def test_general_arguments_without_general(self):
        """Test general_arguments rejects cases without a general form."""
        from duality_lab.closedform import general_arguments
        from duality_lab.errors import UnknownCase
        with pytest.raises(UnknownCase):
            general_arguments("ASYM_D_PHI", {"phi": 1.0})

    def test_asym_branches(self):
        """Test the asymmetric curves leave the plateau at the edges."""
        from duality_lab.closedform import ASYM_PLATEAU, eval_case
        assert eval_case("ASYM_D_THETA", theta=0.0) != ASYM_PLATEAU
        assert eval_case("ASYM_D_THETA", theta=3.0) != ASYM_PLATEAU
        assert eval_case("ASYM_D_PHI", phi=0.0) == ASYM_PLATEAU
        assert eval_case("ASYM_D_PHI", phi=PI) != ASYM_PLATEAU


class TestEngineAgreement:
    """Test cases comparing closed forms with the numeric engine."""

    @pytest.mark.parametrize("case_id", F_CASES)
    def test_f_exact(self, case_id):
        """Test each F closed form matches the trace-norm engine value."""
        from duality_lab.closedform import (case_constraint, closed_form,
                                            eval_case)
        from duality_lab.duality import evaluate
        entry = closed_form(case_id)
        draws = _draw(case_id, 500, 4)
        batch = entry.constraint.batch(entry.channel, draws)
        expected = eval_case(case_id, {name: draws[name] for name
                                       in case_constraint(case_id).free})
        assert np.allclose(evaluate(batch).f_exact, expected, atol=1e-9)

    @pytest.mark.parametrize("case_id", ("ASYM_D_THETA", "ASYM_D_PHI"))
    def test_asym(self, case_id):
        """Test the asymmetric fits stay within their quoted precision."""
        from duality_lab.closedform import (ASYM_TOLERANCE, closed_form,
                                            eval_case)
        from duality_lab.duality import evaluate
        entry = closed_form(case_id)
        draws = _draw(case_id, 500, 5)
        (name,) = entry.constraint.free
        report = evaluate(entry.constraint.batch(entry.channel, draws))
        expected = eval_case(case_id, {name: draws[name]})
        deviation = min(np.max(np.abs(report.field(field) - expected))
                        for field in ("D2_exact", "D2_bound"))
        assert deviation <= ASYM_TOLERANCE
