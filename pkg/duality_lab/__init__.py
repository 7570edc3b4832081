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
"""duality-lab package.

Complementarity of coherence and path distinguishability for a qubit
quanton whose which-path detector is exposed to noise.
"""

from __future__ import annotations

import logging

log = logging.getLogger(__name__)
