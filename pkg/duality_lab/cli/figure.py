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
"""duality-lab figure command implementation."""

from __future__ import annotations

import math
import typing

import verboselogs

from . import Args, BaseCommand, Return
from .helpers import (ANGLES, META_SETTING, add_output_arguments, require,
                      setting, summary, write_output)
from ..explore.figures import FigureId
from ..explore.tables import FORMATS

log = verboselogs.VerboseLogger(__name__)


class Figure(BaseCommand):
    """Generate the dataset behind a published curve or contour panel.

    Curve panels give C2_s, D2_s, F_s for the symmetric quanton and
    C2_a, D2_a, F_a for p1 = 1/8, i.e. C**2, D**2 and F of each series.
    Contour panels give the two axis columns and F.
    """

    subcommand = "figure"

    def init_parser(self) -> None:
        """Set up command line argument parser."""
        self.parser.add_argument("--id", dest="figure_id",
                                 choices=[f.value for f in FigureId],
                                 help="Figure panel to generate")
        self.parser.add_argument("--count", "-n", type=int,
                                 help="Points per axis (default: 201 for "
                                      "curves, 101 for contours)")
        self.parser.add_argument("--measure", choices=("exact", "bound"),
                                 default="exact",
                                 help="Distinguishability entering F "
                                      "(default: %(default)s)")
        self.parser.add_argument("--set", dest="overrides", nargs="+",
                                 type=setting, metavar=META_SETTING,
                                 default=[],
                                 help="Override a caption binding, "
                                      "e.g. eta2=-pi/2")
        self.parser.add_argument("--degrees", action="store_true",
                                 default=False,
                                 help="Read angle overrides in degrees")
        add_output_arguments(self.parser, FORMATS, "csv")

    def run(self,
            parsed_args: Args,
            *args: typing.Any,
            **kwargs: typing.Any) -> Return:
        """Run with the given arguments."""
        from ..explore.figures import figure_dataset
        require(parsed_args, "figure_id")
        overrides = {name: (math.radians(value)
                            if parsed_args.degrees and name in ANGLES
                            else value)
                     for name, value in parsed_args.overrides}
        table = figure_dataset(parsed_args.figure_id,
                               count=parsed_args.count,
                               measure=parsed_args.measure,
                               overrides=overrides)
        write_output(table.dumps(parsed_args.format), parsed_args.out)
        f_columns = [name for name in table.columns
                     if name == "F" or name.startswith("F_")]
        low = min(float(table.column(name).min()) for name in f_columns)
        high = max(float(table.column(name).max()) for name in f_columns)
        log.verbose(f"{parsed_args.figure_id}: columns {table.columns}")
        summary(f"{parsed_args.figure_id}: {len(table)} rows written, "
                f"F in [{low:.6g}, {high:.6g}]", parsed_args.out)
        return None
