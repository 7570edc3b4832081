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
"""Sweeps, figure datasets, closed-form verification and control search."""

from __future__ import annotations

import logging

from . import controls, figures, levels, sweep, tables, verify

log = logging.getLogger(__name__)

Table = tables.Table

Axis = sweep.Axis
SweepSpec = sweep.SweepSpec
run_sweep = sweep.run_sweep

FigureId = figures.FigureId
figure_dataset = figures.figure_dataset

level_crossings = levels.level_crossings
plateau_intervals = levels.plateau_intervals

VerifyReport = verify.VerifyReport
verify_closed_forms = verify.verify_closed_forms

ControlSearchSpec = controls.ControlSearchSpec
ControlResult = controls.ControlResult
find_controls = controls.find_controls
TABLE_ONE = controls.TABLE_ONE
audit_table_row = controls.audit_table_row
