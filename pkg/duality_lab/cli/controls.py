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
"""duality-lab find-controls command implementation."""

from __future__ import annotations

import json
import math
import typing

import verboselogs

from . import Args, BaseCommand, Return
from .helpers import (ANGLES, META_REAL, META_SETTING, real, require,
                      setting, summary, write_output)
from ..channels import ChannelKind
from ..explore.controls import (CONTROL_VARIABLES, DEFAULT_COARSE_COUNT,
                                DEFAULT_GRID_COUNT, DEFAULT_THRESHOLD)

log = verboselogs.VerboseLogger(__name__)


class FindControls(BaseCommand):
    """Search control angles keeping F above a threshold for all detectors.

    With --audit, evaluate the published control-parameter table instead.
    """

    subcommand = "find-controls"

    def init_parser(self) -> None:
        """Set up command line argument parser."""
        self.parser.add_argument("--channel",
                                 choices=[k.value for k in ChannelKind],
                                 help="Detector noise channel")
        self.parser.add_argument("--gamma", type=real, metavar=META_REAL,
                                 help="Channel strength in [0, 1]")
        self.parser.add_argument("--p1", type=real, default=0.5,
                                 metavar=META_REAL,
                                 help="Probability of the first path "
                                      "(default: %(default)s)")
        self.parser.add_argument("--threshold", type=real,
                                 default=DEFAULT_THRESHOLD,
                                 metavar=META_REAL,
                                 help="Required worst-case F "
                                      "(default: %(default)s)")
        self.parser.add_argument("--controls", nargs="+",
                                 choices=CONTROL_VARIABLES,
                                 default=["deta", "dbeta"],
                                 help="Variables to optimise "
                                      "(default: %(default)s)")
        self.parser.add_argument("--fix", nargs="+", type=setting,
                                 metavar=META_SETTING, default=[],
                                 help="Hold other unitary angles fixed, "
                                      "e.g. ddelta=0")
        self.parser.add_argument("--grid", type=int,
                                 default=DEFAULT_GRID_COUNT,
                                 help="Points per detector axis "
                                      "(default: %(default)s)")
        self.parser.add_argument("--coarse", type=int,
                                 default=DEFAULT_COARSE_COUNT,
                                 help="Coarse points per control "
                                      "(default: %(default)s)")
        self.parser.add_argument("--measure", choices=("exact", "bound"),
                                 default="exact",
                                 help="Distinguishability entering F "
                                      "(default: %(default)s)")
        self.parser.add_argument("--degrees", action="store_true",
                                 default=False,
                                 help="Read fixed angles in degrees")
        self.parser.add_argument("--audit", action="store_true",
                                 default=False,
                                 help="Audit the published table rows "
                                      "(optionally only --channel)")
        self.parser.add_argument("--out", "-o", metavar="<path>",
                                 help="Path to JSON output "
                                      "(default: STDOUT)")

    def run(self,
            parsed_args: Args,
            *args: typing.Any,
            **kwargs: typing.Any) -> Return:
        """Run with the given arguments."""
        if parsed_args.audit:
            return self._audit(parsed_args)
        from ..channels import ChannelSpec
        from ..explore.controls import ControlSearchSpec, find_controls
        from ..states import QuantonSpec
        require(parsed_args, "channel", "gamma")
        fixed = {name: (math.radians(value)
                        if parsed_args.degrees and name in ANGLES
                        else value)
                 for name, value in parsed_args.fix}
        spec = ControlSearchSpec(
            channel=ChannelSpec(parsed_args.channel, parsed_args.gamma),
            threshold=parsed_args.threshold,
            controls=tuple(parsed_args.controls),
            quanton=QuantonSpec(parsed_args.p1),
            fixed=fixed,
            theta_count=parsed_args.grid,
            phi_count=parsed_args.grid,
            coarse_count=parsed_args.coarse,
            measure=parsed_args.measure)
        log.verbose(f"searching with {spec}")
        result = find_controls(spec)
        write_output(json.dumps(result.to_dict(), indent=2,
                                sort_keys=True) + "\n", parsed_args.out)
        assignment = ", ".join(f"{name}={value:.6g}"
                               for name, value in result.assignment.items())
        relation = ">=" if result.met else "<"
        summary(f"find-controls: {spec.channel.kind.value} "
                f"gamma={spec.channel.gamma:g}: min F {result.min_f:.6g} "
                f"{relation} {spec.threshold:g} at {assignment}",
                parsed_args.out)
        return None

    def _audit(self, parsed_args: Args) -> Return:
        from ..explore.controls import TABLE_ONE, audit_table_row
        rows = [row for row in TABLE_ONE
                if parsed_args.channel in (None, row.channel.value)]
        audits = [audit_table_row(row, parsed_args.grid, parsed_args.grid)
                  for row in rows]
        write_output(json.dumps([a.to_dict() for a in audits], indent=2,
                                sort_keys=True) + "\n", parsed_args.out)
        parts = [f"{a.row.channel.value} min F {a.min_f:.4g} "
                 f"({'holds' if a.holds else 'fails'})" for a in audits]
        summary(f"find-controls --audit: {'; '.join(parts)}",
                parsed_args.out)
        return None
