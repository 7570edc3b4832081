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
"""JSON schemas for configuration files and reports."""

from __future__ import annotations

import functools
import importlib.resources
import json
import logging
import typing

import jsonschema

from ..errors import SchemaViolation

log = logging.getLogger(__name__)

SCHEMAS: typing.Final = ("config", "verify-report")


@functools.lru_cache(maxsize=None)
def load_schema(name: str) -> typing.Dict[str, typing.Any]:
    """Load a packaged schema by name."""
    if name not in SCHEMAS:
        raise KeyError(f"no schema named {name!r}")
    resource = importlib.resources.files(__name__) / f"{name}.json"
    log.debug(f"loading schema '{resource}'")
    with resource.open() as f:
        return typing.cast(typing.Dict[str, typing.Any], json.load(f))


@functools.lru_cache(maxsize=None)
def validator(name: str) -> typing.Any:
    """Construct a validator for a packaged schema."""
    schema = load_schema(name)
    validator_cls = jsonschema.validators.validator_for(schema)
    log.debug(f"constructing '{validator_cls.__name__}' validator "
              f"for {name}")
    validator_cls.check_schema(schema)
    return validator_cls(schema)


def violations(data: typing.Any, name: str) -> typing.List[str]:
    """List the schema violations of a document."""
    errors = sorted(validator(name).iter_errors(data),
                    key=lambda e: [str(p) for p in e.path])
    return [f"{'/'.join(map(str, e.path)) or '<root>'}: {e.message}"
            for e in errors]


def validate(data: typing.Any, name: str) -> None:
    """Raise SchemaViolation unless the document conforms."""
    errors = violations(data, name)
    if errors:
        for error in errors:
            log.error(f"{name} validation error: {error}")
        raise SchemaViolation(f"{name} document is invalid: "
                              f"{'; '.join(errors)}")
