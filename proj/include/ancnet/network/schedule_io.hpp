// Copyright 2026 The ancnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "ancnet/network/schedule.hpp"

namespace ancnet::network {

// JSON document {format, version, mode, qubits, placement, spot_radius,
// timing, events}. Times are written as decimal strings with 17 significant
// digits so they survive a round trip unchanged.
std::string schedule_to_json(const PulseSchedule& schedule, int indent = 2);

// Throws ParseError for malformed documents.
PulseSchedule schedule_from_json(std::string_view text);

}  // namespace ancnet::network
