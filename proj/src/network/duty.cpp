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

#include "ancnet/network/duty.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace ancnet::network {

double DutyReport::mean_ratio() const {
  const std::size_t n = qubit_count > 0 ? qubit_count : cells.size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += cells[i].duty_ratio;
  return sum / static_cast<double>(n);
}

DutyReport duty_ratio_report(const PulseSchedule& schedule, double tau_a) {
  struct Track {
    std::vector<std::pair<int, int>> lines;  // open transitions, innermost last
    double since = 0.0;
    double active = 0.0;
  };
  std::map<std::size_t, Track> tracks;
  for (std::size_t site : schedule.placement) tracks[site];
  double total = 0.0;
  for (const Event& e : schedule.events) {
    Track& t = tracks[e.cell];
    if (e.kind != EventKind::kPiPulse) continue;
    const std::pair<int, int> line{e.source, e.ancilla};
    if (!t.lines.empty() && t.lines.back() == line) {
      t.lines.pop_back();
      if (t.lines.empty()) {
        t.active += e.end_time() - t.since;
        total = std::max(total, e.end_time());
      }
    } else {
      if (t.lines.empty()) t.since = e.start_time;
      t.lines.push_back(line);
    }
  }

  DutyReport r;
  r.total_time = total;
  r.qubit_count = schedule.placement.size();
  auto row = [&](std::size_t site) {
    const Track& t = tracks.at(site);
    const double ratio = total > 0.0 ? t.active / total : 0.0;
    const double eff = ratio > 0.0 ? tau_a / ratio : std::numeric_limits<double>::infinity();
    r.cells.push_back({site, total > 0.0 ? t.active : 0.0, ratio, eff});
  };
  for (std::size_t site : schedule.placement) row(site);
  for (const auto& [site, t] : tracks) {
    if (std::find(schedule.placement.begin(), schedule.placement.end(), site) ==
        schedule.placement.end()) {
      row(site);
    }
  }
  return r;
}

}  // namespace ancnet::network
