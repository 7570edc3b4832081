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
"""Utilities and helper classes and functions."""
from __future__ import annotations

import concurrent.futures
import logging
import os
import typing

from .errors import ConfigError

log = logging.getLogger(__name__)

THREADS_ENV: typing.Final = "DUALITY_LAB_THREADS"
DEFAULT_MAX_THREADS: typing.Final = 4
CHUNK_SIZE: typing.Final = 4096

T = typing.TypeVar("T")
R = typing.TypeVar("R")


def worker_count(environ: typing.Optional[typing.Mapping[str, str]] = None,
                 ) -> int:
    """Get the number of worker threads the explore layer may use."""
    if environ is None:
        environ = os.environ
    value = environ.get(THREADS_ENV)
    if value is None or not value.strip():
        return max(1, min(DEFAULT_MAX_THREADS, os.cpu_count() or 1))
    try:
        count = int(value)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, "
                          f"got {value!r}") from None
    if count < 1:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, "
                          f"got {count}")
    return count


def chunk_slices(total: int, size: int = CHUNK_SIZE) -> typing.List[slice]:
    """Split range(total) into contiguous slices of at most size items."""
    return [slice(start, min(start + size, total))
            for start in range(0, total, size)]


def ordered_map(func: typing.Callable[[T], R],
                items: typing.Sequence[T],
                workers: typing.Optional[int] = None) -> typing.List[R]:
    """Apply func to items, possibly in threads, keeping input order."""
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    log.debug(f"mapping {len(items)} work items over {workers} threads")
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def format_float(value: float) -> str:
    """Format a float with 17 significant digits."""
    return f"{value:.17g}"
