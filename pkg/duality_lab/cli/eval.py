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
"""duality-lab eval command implementation."""

from __future__ import annotations

import csv
import io
import typing

import verboselogs

from . import Args, BaseCommand, Return
from .helpers import (add_output_arguments, add_scenario_arguments,
                      require, scenario_values, write_output)

log = verboselogs.VerboseLogger(__name__)

FORMATS: typing.Final = ("json", "csv")


class Eval(BaseCommand):
    """Evaluate coherence, distinguishability and F at one scenario."""

    subcommand = "eval"

    def init_parser(self) -> None:
        """Set up command line argument parser."""
        add_scenario_arguments(self.parser)
        add_output_arguments(self.parser, FORMATS, "json")

    def run(self,
            parsed_args: Args,
            *args: typing.Any,
            **kwargs: typing.Any) -> Return:
        """Run with the given arguments."""
        from ..duality import CSV_COLUMNS, ScenarioParams, complementarity
        require(parsed_args, "channel", "gamma", "p1", "theta", "phi")
        values: typing.Dict[str, typing.Any] = {
            **scenario_values(parsed_args), "channel": parsed_args.channel}
        scenario = ScenarioParams.from_mapping(values)
        log.info(f"evaluating {scenario}")
        report = complementarity(scenario)
        if parsed_args.format == "json":
            text = report.to_json() + "\n"
        else:
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerow(report.to_csv_row())
            text = buf.getvalue()
        write_output(text, parsed_args.out)
        log.verbose(f"F_exact = {report.f_exact:.12g}, "
                    f"F_bound = {report.f_bound:.12g}")
        return None
