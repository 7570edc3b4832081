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
"""duality-lab cli argument helpers."""

from __future__ import annotations

import argparse
import logging
import math
import pathlib
import re
import sys
import typing

from ..channels import ChannelKind
from ..duality import UNITARY_PARAMETERS
from ..errors import ConfigError
from ..explore.sweep import DIFFERENCES, Axis

log = logging.getLogger(__name__)

ANGLES: typing.Final = ("theta", "phi") + UNITARY_PARAMETERS + DIFFERENCES
SCENARIO_FLAGS: typing.Final = (("p1", "gamma") + ANGLES)

META_REAL: typing.Final = "<real>"
META_ANGLE: typing.Final = "<angle>"
META_AXIS: typing.Final = "<name>:<start>:<stop>:<count>"
META_SETTING: typing.Final = "<name>=<value>"

_REAL = re.compile(r"""^\s*
                       (?P<sign>[+-])?
                       (?P<coef>(?:\d+(?:\.\d*)?|\.\d+)(?:e[+-]?\d+)?)?
                       \s*\*?\s*
                       (?P<pi>pi|π)?
                       \s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?
                       \s*$""", re.VERBOSE | re.IGNORECASE)


def real(input_str: str) -> float:
    """Convert input string to float.

    Accepts decimals and simple fractions of pi such as '3pi/4', '-pi',
    '2*pi' or '1/8'.
    """
    match = _REAL.match(input_str)
    if match is None or not (match["coef"] or match["pi"]):
        raise ValueError(f"cannot read a number from {input_str!r}")
    value = float(match["coef"]) if match["coef"] else 1.0
    if match["pi"]:
        value *= math.pi
    if match["den"]:
        value /= float(match["den"])
    if match["sign"] == "-":
        value = -value
    return value


def axis(input_str: str) -> Axis:
    """Convert input string to a sweep Axis."""
    try:
        name, start, stop, count = input_str.split(":")
    except ValueError:
        raise ValueError(f"expected {META_AXIS}, got {input_str!r}") from None
    return Axis(name.strip(), real(start), real(stop), int(count))


def setting(input_str: str) -> typing.Tuple[str, float]:
    """Convert 'name=value' to a (name, value) pair."""
    name, sep, value = input_str.partition("=")
    if not sep or not name.strip():
        raise ValueError(f"expected {META_SETTING}, got {input_str!r}")
    return name.strip(), real(value)


def add_output_arguments(parser: argparse.ArgumentParser,
                         formats: typing.Sequence[str],
                         default_format: str) -> None:
    """Add the --format and --out options."""
    parser.add_argument("--format", "-f", choices=formats,
                        default=default_format,
                        help="Output format (default: %(default)s)")
    parser.add_argument("--out", "-o", metavar="<path>",
                        help="Path to output file (default: STDOUT)")


def add_scenario_arguments(parser: argparse.ArgumentParser,
                           channel_default: typing.Optional[str] = None,
                           ) -> None:
    """Add the channel, quanton, detector and unitary options."""
    group = parser.add_argument_group("scenario options")
    group.add_argument("--channel", choices=[k.value for k in ChannelKind],
                       default=channel_default,
                       help="Detector noise channel"
                            + (" (default: %(default)s)"
                               if channel_default else ""))
    group.add_argument("--gamma", type=real, metavar=META_REAL,
                       help="Channel strength in [0, 1]")
    group.add_argument("--p1", type=real, metavar=META_REAL,
                       help="Probability of the first path")
    group.add_argument("--theta", type=real, metavar=META_ANGLE,
                       help="Polar angle of the detector state")
    group.add_argument("--phi", type=real, metavar=META_ANGLE,
                       help="Azimuthal angle of the detector state")
    unitary = parser.add_argument_group(
        "unitary options",
        description="Angles of the path-conditioned unitaries (default 0).\n"
                    "The difference shorthands set x1 = 0 unless given and\n"
                    "x2 = x1 - dx, so --dbeta D means beta2 = -D; raw\n"
                    "angles win over a shorthand.")
    for name in UNITARY_PARAMETERS:
        unitary.add_argument(f"--{name}", type=real, metavar=META_ANGLE)
    for name in DIFFERENCES:
        unitary.add_argument(f"--{name}", type=real, metavar=META_ANGLE,
                             help=f"Shorthand for {name[1:]}1 - "
                                  f"{name[1:]}2")
    parser.add_argument("--degrees", action="store_true", default=False,
                        help="Read every angle option in degrees")


def to_radians(parsed_args: argparse.Namespace,
               values: typing.Mapping[str, float],
               ) -> typing.Dict[str, float]:
    """Convert the angle entries of values when --degrees is set."""
    if not parsed_args.degrees:
        return dict(values)
    return {name: math.radians(value) if name in ANGLES else value
            for name, value in values.items()}


def scenario_values(parsed_args: argparse.Namespace,
                    ) -> typing.Dict[str, float]:
    """Collect the scenario options that were set.

    Difference shorthands are resolved here. A raw angle takes precedence
    over its shorthand unless only the raw angle came from a config file.
    """
    from_config = getattr(parsed_args, "config_dests", frozenset())
    given = {name: getattr(parsed_args, name) for name in SCENARIO_FLAGS
             if getattr(parsed_args, name, None) is not None}
    given = to_radians(parsed_args, given)
    for diff in DIFFERENCES:
        if diff not in given:
            continue
        d = given.pop(diff)
        first, second = f"{diff[1:]}1", f"{diff[1:]}2"
        if second in given:
            if second not in from_config or diff in from_config:
                log.warning(f"--{second} overrides --{diff}")
                continue
            log.info(f"--{diff} overrides {second} from the config file")
        given.setdefault(first, 0.0)
        given[second] = given[first] - d
    return given


def require(parsed_args: argparse.Namespace, *names: str) -> None:
    """Raise ConfigError unless each named option was supplied."""
    missing = [f"--{name.replace('_', '-')}" for name in names
               if getattr(parsed_args, name, None) is None]
    if missing:
        raise ConfigError(f"missing required option(s) "
                          f"{', '.join(missing)}; give them on the "
                          f"command line or in a config file")


def write_output(text: str, path: typing.Optional[str]) -> None:
    """Write text to a file, or to stdout when no path is given."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    log.info(f"writing output to {path}")
    pathlib.Path(path).write_text(text, encoding="utf-8")


def summary(line: str, path: typing.Optional[str]) -> None:
    """Print the one-line summary of a command.

    When data goes to stdout the summary goes to stderr.
    """
    stream = sys.stderr if path is None or path == "-" else sys.stdout
    print(line, file=stream)
