# Copyright 2026 The ancnet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the ancnet simulator and schedule compiler."""

from ._core import (  # noqa: F401
    AncnetError,
    cnot_sequence,
    compile,
    contraction_sweep,
    duty_ratios,
    occupation_product,
    phase_unitary,
    pi_pulse_matrix,
    program_matrix,
    purity_vs_time_ratio,
    rotation_unitary,
    route,
    simulate,
    swap_unitary,
    two_level_reference,
)

__version__ = "0.1.0"
