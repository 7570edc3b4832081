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
"""duality-lab exception classes."""

from __future__ import annotations

import logging

log = logging.getLogger(__name__)


class DualityLabError(Exception):
    """Base class for duality-lab errors."""


class DomainError(DualityLabError, ValueError):
    """A parameter lies outside its physical range."""


class NonFiniteInput(DualityLabError, ValueError):
    """A NaN or infinite value was passed to a public constructor."""


class NonHermitianInput(DualityLabError, ValueError):
    """A matrix failed the Hermiticity check."""


class NormError(DualityLabError, ValueError):
    """A ket is not normalised."""


class InvalidDensity(DualityLabError, ValueError):
    """A matrix is not a valid density operator."""


class UnknownCase(DualityLabError, KeyError):
    """No closed form is registered under the requested id."""


class MissingArgument(DualityLabError, KeyError):
    """A free variable of a closed form was not supplied."""


class UnexpectedArgument(DualityLabError, ValueError):
    """An argument was supplied that is not a free variable of a case."""


class UnknownFigure(DualityLabError, KeyError):
    """No dataset is defined for the requested figure id."""


class InvalidAxis(DualityLabError, ValueError):
    """A sweep or figure axis is malformed."""


class ConfigError(DualityLabError, ValueError):
    """A configuration file or environment setting is invalid."""


class SchemaViolation(DualityLabError, ValueError):
    """A document does not conform to its JSON schema."""
