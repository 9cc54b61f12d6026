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

#include <string_view>
#include <vector>

namespace ancnet::cli {

// "start:stop:step" (inclusive of stop within half a step), a comma list
// "0,0.1,0.5" or a single value. Throws ParseError; "" gives "empty grid".
std::vector<double> parse_grid(std::string_view text);

}  // namespace ancnet::cli
