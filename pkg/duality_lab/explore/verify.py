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
"""Cross-check of the closed forms against the numeric engine."""

from __future__ import annotations

import dataclasses
import json
import logging
import math
import typing

import numpy as np

from .levels import case_level_crossings, plateau_intervals
from .sweep import evaluate_chunked
from ..closedform import (CaseId, ClosedForm, REGISTRY, VARIABLE_RANGES,
                          case_constraint, closed_form, eval_case)
from ..errors import DomainError
from ..qmat import FloatArray
from ..schema import validate
from ..utils import ordered_map

log = logging.getLogger(__name__)

PRNG_ALGORITHM: typing.Final = "PCG64"
MIN_SAMPLES: typing.Final = 100
DEFAULT_SAMPLES: typing.Final = 10_000
DEFAULT_TOLERANCE: typing.Final = 1e-9
MEASURES: typing.Final = ("exact", "bound")
PI: typing.Final = math.pi


@dataclasses.dataclass(frozen=True)
class CaseResult:
    """Verification outcome of one closed form."""

    case_id: CaseId
    quantity: str
    samples: int
    tolerance: float
    deviation: typing.Mapping[str, float]
    worst: typing.Mapping[str, typing.Mapping[str, float]]
    matched: typing.Tuple[str, ...]

    @property
    def passed(self) -> bool:
        """Check whether the closed form matched either measure."""
        return bool(self.matched)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Get a JSON-serialisable representation."""
        return {"case": self.case_id.value,
                "quantity": self.quantity,
                "samples": self.samples,
                "tolerance": self.tolerance,
                "deviation": dict(self.deviation),
                "worst": {measure: dict(args)
                          for measure, args in self.worst.items()},
                "matched": list(self.matched),
                "passed": self.passed}


@dataclasses.dataclass(frozen=True)
class ClaimCheck:
    """A numeric statement from the text, recomputed."""

    claim: str
    printed: typing.Tuple[float, ...]
    computed: typing.Tuple[float, ...]
    tolerance: float

    @property
    def holds(self) -> bool:
        """Check the computed values reproduce the printed ones."""
        return (len(self.printed) == len(self.computed)
                and all(abs(p - c) <= self.tolerance
                        for p, c in zip(self.printed, self.computed)))

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Get a JSON-serialisable representation."""
        return {"claim": self.claim,
                "printed": list(self.printed),
                "computed": list(self.computed),
                "tolerance": self.tolerance,
                "holds": self.holds}


@dataclasses.dataclass(frozen=True)
class VerifyReport:
    """Outcome of a verification run."""

    seed: int
    samples: int
    tolerance: float
    fixed_gamma: typing.Optional[float]
    cases: typing.Tuple[CaseResult, ...]
    claims: typing.Tuple[ClaimCheck, ...] = ()
    algorithm: str = PRNG_ALGORITHM

    @property
    def passed(self) -> bool:
        """Check whether every case passed."""
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> typing.List[CaseResult]:
        """Get the failing cases."""
        return [case for case in self.cases if not case.passed]

    def result(self, case_id: typing.Union[str, CaseId]) -> CaseResult:
        """Get the result of one case."""
        wanted = CaseId.parse(case_id)
        for case in self.cases:
            if case.case_id is wanted:
                return case
        raise KeyError(wanted)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Get a JSON-serialisable representation."""
        return {"prng": {"algorithm": self.algorithm, "seed": self.seed},
                "samples": self.samples,
                "tolerance": self.tolerance,
                "fixed_gamma": self.fixed_gamma,
                "passed": self.passed,
                "cases": [case.to_dict() for case in self.cases],
                "claims": [claim.to_dict() for claim in self.claims]}

    def to_json(self) -> str:
        """Serialise deterministically as JSON."""
        data = self.to_dict()
        validate(data, "verify-report")
        return json.dumps(data, indent=2, sort_keys=True) + "\n"


def case_generator(seed: int, case_id: CaseId) -> np.random.Generator:
    """Get the random stream of one case.

    Streams are keyed by the case's registry position so that a case's
    draws do not depend on which other cases are verified.
    """
    index = list(REGISTRY).index(case_id)
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(sequence))


def sample_case(entry: ClosedForm, samples: int, rng: np.random.Generator,
                fixed_gamma: typing.Optional[float] = None,
                ) -> typing.Dict[str, FloatArray]:
    """Draw the free and nuisance variables of a case uniformly."""
    draws: typing.Dict[str, FloatArray] = {}
    for name in entry.constraint.sampled:
        lower, upper = VARIABLE_RANGES[name]
        draws[name] = rng.uniform(lower, upper, samples)
    if fixed_gamma is not None and "gamma" in draws:
        draws["gamma"] = np.full(samples, float(fixed_gamma))
    return draws


def _engine_values(entry: ClosedForm, draws: typing.Mapping[str, FloatArray],
                   workers: typing.Optional[int],
                   ) -> typing.Dict[str, FloatArray]:
    report = evaluate_chunked(entry.constraint.batch(entry.channel, draws),
                              workers=workers)
    if entry.quantity == "D2":
        return {"exact": report.d_exact ** 2, "bound": report.d_bound ** 2}
    return {"exact": report.f_exact, "bound": report.f_bound}


def verify_case(case_id: typing.Union[str, CaseId],
                tolerance: float = DEFAULT_TOLERANCE,
                samples: int = DEFAULT_SAMPLES,
                seed: int = 0,
                fixed_gamma: typing.Optional[float] = None,
                workers: typing.Optional[int] = 1) -> CaseResult:
    """Compare one closed form with the engine on random draws."""
    entry = closed_form(case_id)
    rng = case_generator(seed, entry.case_id)
    draws = sample_case(entry, samples, rng, fixed_gamma)
    formula = np.broadcast_to(
        eval_case(entry.case_id, {name: draws[name]
                                  for name in entry.constraint.free}),
        (samples,))
    engine = _engine_values(entry, draws, workers)
    effective = max(tolerance, entry.tolerance_floor)
    deviation: typing.Dict[str, float] = {}
    worst: typing.Dict[str, typing.Dict[str, float]] = {}
    for measure in MEASURES:
        error = np.abs(formula - engine[measure])
        i = int(np.argmax(error))
        deviation[measure] = float(error[i])
        worst[measure] = {name: float(values[i])
                          for name, values in draws.items()}
    matched = tuple(m for m in MEASURES if deviation[m] <= effective)
    result = CaseResult(case_id=entry.case_id, quantity=entry.quantity,
                        samples=samples, tolerance=effective,
                        deviation=deviation, worst=worst, matched=matched)
    if result.passed:
        log.info(f"{entry.case_id.value}: matches {', '.join(matched)} "
                 f"(max deviation {min(deviation.values()):.3e})")
    else:
        log.warning(f"{entry.case_id.value}: no match at {effective:.1e} "
                    f"(exact {deviation['exact']:.3e} at "
                    f"{worst['exact']}, bound {deviation['bound']:.3e})")
    return result


def _crossings(case: CaseId, level: float, variable: str,
               lower: float, upper: float,
               **fixed: float) -> typing.Tuple[float, ...]:
    return tuple(case_level_crossings(case, level, variable,
                                      lower, upper, fixed))


def _value(case: CaseId, **args: float) -> float:
    return float(eval_case(case, args))


def check_claims() -> typing.Tuple[ClaimCheck, ...]:
    """Recompute the numeric statements quoted alongside the closed forms."""
    theta_plateau = plateau_intervals(
        "dc", case_constraint(CaseId.ASYM_D_THETA).fixed, "theta", 0.0, PI)
    phi_plateau = plateau_intervals(
        "dc", case_constraint(CaseId.ASYM_D_PHI).fixed, "phi", 0.0, 2 * PI)
    phi_edges = tuple(edge for interval in phi_plateau
                      for edge in interval if 0.0 < edge < 2 * PI)
    checks = (
        ClaimCheck("DC_CASE1: max deta keeping F >= 0.8 at gamma = 0.2",
                   (1.68,),
                   _crossings(CaseId.DC_CASE1, 0.8, "deta", 0.0, PI,
                              gamma=0.2),
                   0.01),
        ClaimCheck("DC_CASE2: dbeta range with F <= 0.8 at gamma = 0.15",
                   (1.83, 4.45),
                   _crossings(CaseId.DC_CASE2, 0.8, "dbeta", 0.0, 2 * PI,
                              gamma=0.15),
                   0.01),
        ClaimCheck("DC_CASE2: dbeta range with F <= 0.5 at gamma = 0.3",
                   (2.81, 3.47),
                   _crossings(CaseId.DC_CASE2, 0.5, "dbeta", 0.0, 2 * PI,
                              gamma=0.3),
                   0.01),
        ClaimCheck("ADC_CASE1: F >= 0.9 for theta <= 1.77 at "
                   "gamma = 0.075",
                   (1.77,),
                   _crossings(CaseId.ADC_CASE1, 0.9, "theta", 0.0, PI,
                              gamma=0.075),
                   0.01),
        ClaimCheck("ADC_CASE1: F = 0 at gamma = 1/2, theta = pi",
                   (0.0,),
                   (_value(CaseId.ADC_CASE1, gamma=0.5, theta=PI),),
                   1e-12),
        ClaimCheck("ADC_CASE3: F = 0 at gamma = 1/2, dbeta = pi",
                   (0.0,),
                   (_value(CaseId.ADC_CASE3, gamma=0.5, dbeta=PI),),
                   1e-12),
        ClaimCheck("ADC_CASE5: minimum 0.75 at deta = pi",
                   (0.75,),
                   (_value(CaseId.ADC_CASE5, deta=PI, dbeta=0.0),),
                   1e-12),
        ClaimCheck("PDC_CASE1: F ~ 0.9 for 0.81 <= theta <= 2.33 at "
                   "gamma = 0.075",
                   (0.81, 2.33),
                   _crossings(CaseId.PDC_CASE1, 0.9, "theta", 0.0, PI,
                              gamma=0.075),
                   0.01),
        ClaimCheck("PDC_CASE2B vs PDC_CASE2: 5/8 vs 1/2 at gamma = 1, "
                   "deta = 0",
                   (5 / 8, 1 / 2),
                   (_value(CaseId.PDC_CASE2B, gamma=1.0, deta=0.0),
                    _value(CaseId.PDC_CASE2, gamma=1.0, deta=0.0)),
                   1e-12),
        ClaimCheck("PDC_CASE2B vs PDC_CASE2: 5/8 vs 1/2 at gamma = 1, "
                   "deta = pi/2",
                   (5 / 8, 1 / 2),
                   (_value(CaseId.PDC_CASE2B, gamma=1.0, deta=PI / 2),
                    _value(CaseId.PDC_CASE2, gamma=1.0, deta=PI / 2)),
                   1e-12),
        ClaimCheck("ASYM_D_THETA: plateau for 0.12 <= theta <= 1.37",
                   (0.12, 1.37),
                   tuple(edge for interval in theta_plateau
                         for edge in interval),
                   0.01),
        ClaimCheck("ASYM_D_PHI: curve branch for 0.98 <= phi <= 5.3",
                   (0.98, 5.3),
                   phi_edges,
                   0.01),
    )
    for check in checks:
        if not check.holds:
            log.warning(f"claim not reproduced: {check.claim}: printed "
                        f"{check.printed}, computed {check.computed}")
    return checks


def verify_closed_forms(tolerance: float = DEFAULT_TOLERANCE,
                        samples: int = DEFAULT_SAMPLES,
                        seed: int = 0,
                        cases: typing.Optional[
                            typing.Sequence[typing.Union[str,
                                                         CaseId]]] = None,
                        fixed_gamma: typing.Optional[float] = None,
                        claims: bool = True,
                        workers: typing.Optional[int] = None,
                        ) -> VerifyReport:
    """Verify closed forms against the engine on seeded random draws.

    Each case is compared with both distinguishability measures and
    passes when it matches either within ``max(tolerance, floor)``,
    where the floor accounts for expressions printed with rounded
    coefficients.
    """
    if samples < MIN_SAMPLES:
        raise DomainError(f"samples must be at least {MIN_SAMPLES}, "
                          f"got {samples}")
    if not tolerance > 0:
        raise DomainError(f"tolerance must be positive, got {tolerance}")
    ids = [CaseId.parse(c) for c in cases] if cases else list(REGISTRY)
    log.info(f"verifying {len(ids)} closed forms with {samples} samples "
             f"each ({PRNG_ALGORITHM}, seed {seed})")
    results = ordered_map(lambda case_id: verify_case(case_id, tolerance,
                                                      samples, seed,
                                                      fixed_gamma),
                          ids, workers)
    return VerifyReport(seed=seed, samples=samples, tolerance=tolerance,
                        fixed_gamma=fixed_gamma, cases=tuple(results),
                        claims=check_claims() if claims else ())
