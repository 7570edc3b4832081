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
"""duality-lab verify command implementation."""

from __future__ import annotations

import typing

import verboselogs

from . import Args, BaseCommand, EXIT_FAILURE, Return
from .helpers import META_REAL, real, summary, write_output
from ..closedform import CaseId
from ..explore.verify import DEFAULT_SAMPLES, DEFAULT_TOLERANCE

log = verboselogs.VerboseLogger(__name__)


class Verify(BaseCommand):
    """Check the closed-form expressions against the numeric engine."""

    subcommand = "verify"

    def init_parser(self) -> None:
        """Set up command line argument parser."""
        self.parser.add_argument("--samples", "-n", type=int,
                                 default=DEFAULT_SAMPLES,
                                 help="Random draws per case "
                                      "(default: %(default)s)")
        self.parser.add_argument("--seed", "-s", type=int, default=0,
                                 help="PRNG seed (default: %(default)s)")
        self.parser.add_argument("--tol", "-t", type=real,
                                 default=DEFAULT_TOLERANCE,
                                 metavar=META_REAL,
                                 help="Absolute tolerance "
                                      "(default: %(default)s)")
        self.parser.add_argument("--case", dest="cases", nargs="+",
                                 choices=[c.value for c in CaseId],
                                 metavar="<case-id>",
                                 help="Restrict to these cases "
                                      "(default: all)")
        self.parser.add_argument("--fix-gamma", type=real,
                                 metavar=META_REAL,
                                 help="Hold gamma at this value wherever "
                                      "it is a free variable")
        self.parser.add_argument("--no-claims", dest="claims",
                                 action="store_false", default=True,
                                 help="Skip recomputing the quoted "
                                      "numeric claims")
        self.parser.add_argument("--out", "-o", metavar="<path>",
                                 help="Path to JSON report "
                                      "(default: STDOUT)")

    def run(self,
            parsed_args: Args,
            *args: typing.Any,
            **kwargs: typing.Any) -> Return:
        """Run with the given arguments."""
        from ..explore.verify import verify_closed_forms
        report = verify_closed_forms(tolerance=parsed_args.tol,
                                     samples=parsed_args.samples,
                                     seed=parsed_args.seed,
                                     cases=parsed_args.cases,
                                     fixed_gamma=parsed_args.fix_gamma,
                                     claims=parsed_args.claims)
        write_output(report.to_json(), parsed_args.out)
        passed = sum(case.passed for case in report.cases)
        line = (f"verify: {passed}/{len(report.cases)} cases passed "
                f"(seed {report.seed}, {report.samples} samples, "
                f"tol {report.tolerance:g})")
        if report.claims:
            held = sum(claim.holds for claim in report.claims)
            line += f"; {held}/{len(report.claims)} claims reproduced"
        summary(line, parsed_args.out)
        if not report.passed:
            for case in report.failures:
                log.error(f"{case.case_id.value} failed: deviation "
                          f"{dict(case.deviation)}")
            return EXIT_FAILURE
        log.success("all closed forms agree with the engine")
        return None
