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
"""Tabular results and their CSV / JSON serialisation."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import logging
import pathlib
import typing

import numpy as np
import numpy.typing as npt

from ..errors import InvalidAxis
from ..utils import format_float

log = logging.getLogger(__name__)

Cell = typing.Union[str, float]
FORMATS: typing.Final = ("csv", "json")


@dataclasses.dataclass(frozen=True)
class Table:
    """Named columns of equal length."""

    columns: typing.Tuple[str, ...]
    data: typing.Mapping[str, npt.NDArray[typing.Any]]

    def __post_init__(self) -> None:
        """Check every column is present and of equal length."""
        lengths = {name: len(self.data[name]) for name in self.columns}
        if len(set(lengths.values())) > 1:
            raise InvalidAxis(f"ragged table columns: {lengths}")

    @classmethod
    def from_columns(cls, columns: typing.Mapping[str, npt.ArrayLike],
                     ) -> Table:
        """Construct from an ordered mapping of column arrays."""
        return cls(columns=tuple(columns),
                   data={name: np.ravel(np.asarray(values))
                         for name, values in columns.items()})

    def __len__(self) -> int:
        """Get the number of rows."""
        if not self.columns:
            return 0
        return len(self.data[self.columns[0]])

    def column(self, name: str) -> npt.NDArray[np.float64]:
        """Get a numeric column."""
        return np.asarray(self.data[name], dtype=np.float64)

    def rows(self) -> typing.Iterator[typing.Tuple[Cell, ...]]:
        """Iterate over rows in index order."""
        for i in range(len(self)):
            yield tuple(_cell(self.data[name][i]) for name in self.columns)

    def records(self) -> typing.List[typing.Dict[str, Cell]]:
        """Get the rows as a list of mappings."""
        return [dict(zip(self.columns, row)) for row in self.rows()]

    def to_csv(self) -> str:
        """Serialise as CSV with a header row."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows():
            writer.writerow(value if isinstance(value, str)
                            else format_float(value) for value in row)
        return buf.getvalue()

    def to_json(self) -> str:
        """Serialise as a JSON array of records."""
        return json.dumps(self.records(), indent=2) + "\n"

    def dumps(self, fmt: str = "csv") -> str:
        """Serialise in the named format."""
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown table format {fmt!r}")

    def write(self, path: typing.Union[str, pathlib.Path],
              fmt: str = "csv") -> None:
        """Write the table to a UTF-8 file."""
        log.info(f"writing {len(self)} rows to {path} as {fmt}")
        pathlib.Path(path).write_text(self.dumps(fmt), encoding="utf-8")


def _cell(value: typing.Any) -> Cell:
    if isinstance(value, str):
        return value
    return float(value)
