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
"""duality-lab sweep command implementation."""

from __future__ import annotations

import dataclasses
import math
import typing

import verboselogs

from . import Args, BaseCommand, Return
from .helpers import (ANGLES, META_AXIS, add_output_arguments,
                      add_scenario_arguments, axis, require,
                      scenario_values, summary, write_output)
from ..duality import REPORT_BATCH_FIELDS
from ..explore.sweep import DEFAULT_OUTPUTS
from ..explore.tables import FORMATS

log = verboselogs.VerboseLogger(__name__)


class Sweep(BaseCommand):
    """Evaluate the engine on a one- or two-axis parameter grid."""

    subcommand = "sweep"

    def init_parser(self) -> None:
        """Set up command line argument parser."""
        self.parser.add_argument("--axis", "-a", nargs="+", type=axis,
                                 metavar=META_AXIS,
                                 help="Swept parameter(s); the first axis "
                                      "varies slowest, e.g. deta:0:2pi:101")
        self.parser.add_argument("--fields", nargs="+",
                                 choices=REPORT_BATCH_FIELDS,
                                 default=list(DEFAULT_OUTPUTS),
                                 help="Report fields to emit "
                                      "(default: %(default)s)")
        add_scenario_arguments(self.parser)
        add_output_arguments(self.parser, FORMATS, "csv")

    def run(self,
            parsed_args: Args,
            *args: typing.Any,
            **kwargs: typing.Any) -> Return:
        """Run with the given arguments."""
        from ..explore.sweep import SweepSpec, run_sweep
        require(parsed_args, "channel", "axis")
        axes = tuple(parsed_args.axis)
        if parsed_args.degrees:
            axes = tuple(dataclasses.replace(a, start=math.radians(a.start),
                                             stop=math.radians(a.stop))
                         if a.name in ANGLES else a
                         for a in axes)
        spec = SweepSpec(channel=parsed_args.channel,
                         template=scenario_values(parsed_args),
                         axes=axes,
                         outputs=tuple(parsed_args.fields))
        table = run_sweep(spec)
        log.verbose(f"evaluated {spec.size} grid points")
        write_output(table.dumps(parsed_args.format), parsed_args.out)
        line = f"sweep: {len(table)} rows written"
        for name in ("F_exact", "F_bound"):
            if name in table.columns:
                column = table.column(name)
                line += (f", {name} in [{column.min():.6g}, "
                         f"{column.max():.6g}]")
        summary(line, parsed_args.out)
        return None
