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

#include "ancnet/cli/grid.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "ancnet/common/error.hpp"

namespace ancnet::cli {

namespace {

constexpr std::size_t kMaxPoints = 1'000'000;

double number(std::string_view s) {
  const std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < str.size() && std::isspace(static_cast<unsigned char>(str[used]))) ++used;
  if (used == 0 || used != str.size() || !std::isfinite(v)) {
    throw ParseError("bad grid value '" + str + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty grid");
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos || text.find(':', b + 1) != std::string_view::npos) {
      throw ParseError("range grid must be start:stop:step");
    }
    const double start = number(trim(text.substr(0, a)));
    const double stop = number(trim(text.substr(a + 1, b - a - 1)));
    const double step = number(trim(text.substr(b + 1)));
    if (!(step > 0.0)) throw ParseError("grid step must be positive");
    if (stop < start) throw ParseError("empty grid");
    const double count = std::floor((stop - start) / step + 0.5);
    if (count + 1 > static_cast<double>(kMaxPoints)) throw ParseError("grid has too many points");
    for (std::size_t i = 0; i <= static_cast<std::size_t>(count); ++i) {
      out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = trim(text.substr(pos, comma - pos));
    if (item.empty()) throw ParseError("empty grid entry");
    out.push_back(number(item));
    pos = comma + 1;
  }
  return out;
}

}  // namespace ancnet::cli
