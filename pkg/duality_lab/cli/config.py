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
"""Config file loading for duality-lab sub-commands."""

from __future__ import annotations

import argparse
import logging
import typing

import yaml

from ..errors import ConfigError
from ..schema import violations

log = logging.getLogger(__name__)

# options that make no sense inside a config file
IGNORED_DESTS: typing.Final = ("config", "help", "verbosity")


def _options(parser: argparse.ArgumentParser,
             ) -> typing.Dict[str, argparse.Action]:
    options: typing.Dict[str, argparse.Action] = {}
    for action in parser._actions:
        if not action.option_strings or action.dest in IGNORED_DESTS:
            continue
        options[action.dest] = action
        for flag in action.option_strings:
            if flag.startswith("--"):
                options[flag[2:].replace("-", "_")] = action
    return options


def _convert(key: str, action: argparse.Action,
             value: typing.Any) -> typing.Any:
    if action.nargs == 0:
        if not isinstance(value, bool):
            raise ConfigError(f"config key {key!r} is a switch and takes "
                              f"true or false, got {value!r}")
        return action.const if value else action.default
    if isinstance(value, bool):
        raise ConfigError(f"config key {key!r} does not take a boolean")
    if isinstance(value, str) and action.type is not None:
        convert = typing.cast(typing.Callable[[str], typing.Any], action.type)
        try:
            value = convert(value)
        except (TypeError, ValueError, argparse.ArgumentTypeError) as e:
            raise ConfigError(f"invalid value {value!r} for config key "
                              f"{key!r}: {e}") from None
    if action.choices is not None and value not in action.choices:
        raise ConfigError(f"invalid value {value!r} for config key "
                          f"{key!r}; choose from "
                          f"{', '.join(map(str, action.choices))}")
    return value


def load_config(path: str, parser: argparse.ArgumentParser,
                ) -> typing.Dict[str, typing.Any]:
    """Read a YAML config file into parser defaults.

    Keys are flag names without the leading dashes, with either dashes or
    underscores. Values are converted with the flag's own type.
    """
    log.info(f"reading config file '{path}'")
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: "
                          f"{e.strerror}") from None
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse config file {path}: {e}") from None
    if data is None:
        log.warning(f"config file {path} is empty")
        return {}
    errors = violations(data, "config")
    if errors:
        raise ConfigError(f"invalid config file {path}: "
                          f"{'; '.join(errors)}")
    options = _options(parser)
    defaults: typing.Dict[str, typing.Any] = {}
    for key, value in data.items():
        name = key.replace("-", "_")
        if name not in options:
            raise ConfigError(f"unknown config key {key!r} for "
                              f"'{parser.prog}'")
        action = options[name]
        dest = action.dest
        if isinstance(value, list):
            if action.nargs not in ("+", "*"):
                raise ConfigError(f"config key {key!r} takes a single "
                                  f"value")
            defaults[dest] = [_convert(key, action, v) for v in value]
        elif action.nargs in ("+", "*"):
            defaults[dest] = [_convert(key, action, value)]
        else:
            defaults[dest] = _convert(key, action, value)
        log.debug(f"config sets {dest} = {defaults[dest]!r}")
    return defaults
