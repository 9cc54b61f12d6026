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

#include "ancnet/network/schedule_io.hpp"

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "ancnet/common/error.hpp"

namespace ancnet::network {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "ancnet-schedule";
constexpr int kVersion = 1;

std::string time_text(double t) { return fmt::format("{:.17g}", t); }

double time_value(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  const auto s = v.get<std::string>();
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError(fmt::format("bad time value '{}' for {}", s, key));
  return d;
}

char axis_char(gates::Axis a) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(gates::axis_letter(a))));
}

gates::Axis axis_from(const std::string& s) {
  if (s == "x") return gates::Axis::kX;
  if (s == "y") return gates::Axis::kY;
  if (s == "z") return gates::Axis::kZ;
  throw ParseError("unknown axis '" + s + "'");
}

}  // namespace

std::string schedule_to_json(const PulseSchedule& s, int indent) {
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["mode"] = s.mode == ScheduleMode::kSerial ? "serial" : "parallel";
  doc["qubits"] = s.qubits;
  doc["placement"] = s.placement;
  doc["spot_radius"] = s.spot_radius;
  doc["timing"] = {{"exchange_j", s.timing.exchange_j},
                   {"rotation_rate", s.timing.rotation_rate},
                   {"phase_rate", s.timing.phase_rate},
                   {"pi_pulse_duration", s.timing.pi_pulse_duration},
                   {"readout_duration", s.timing.readout_duration}};
  json events = json::array();
  for (const Event& e : s.events) {
    json j;
    j["start_time"] = time_text(e.start_time);
    j["duration"] = time_text(e.duration);
    j["kind"] = to_string(e.kind);
    j["cell"] = e.cell;
    j["ancilla"] = e.ancilla;
    j["theta"] = e.theta;
    j["phi"] = e.phi;
    j["frequency_label"] = e.frequency_label ? json(*e.frequency_label) : json(nullptr);
    switch (e.kind) {
      case EventKind::kPiPulse:
        j["source"] = e.source;
        j["spin"] = e.spin_up_only ? "up" : "both";
        break;
      case EventKind::kGatingWindow:
        j["partner"] = e.partner.value_or(0);
        j["partner_ancilla"] = e.partner_ancilla;
        break;
      case EventKind::kRotationWindow:
        j["axis"] = std::string(1, axis_char(e.axis));
        break;
      default:
        break;
    }
    events.push_back(std::move(j));
  }
  doc["events"] = std::move(events);
  return doc.dump(indent) + "\n";
}

PulseSchedule schedule_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.value("format", std::string()) != kFormat) throw ParseError("not an ancnet schedule");
    if (doc.value("version", 0) != kVersion) throw ParseError("unsupported schedule version");
    PulseSchedule s;
    const auto mode = doc.value("mode", std::string("serial"));
    if (mode == "serial") {
      s.mode = ScheduleMode::kSerial;
    } else if (mode == "parallel") {
      s.mode = ScheduleMode::kParallel;
    } else {
      throw ParseError("unknown mode '" + mode + "'");
    }
    s.qubits = doc.at("qubits").get<int>();
    s.placement = doc.at("placement").get<std::vector<std::size_t>>();
    s.spot_radius = doc.at("spot_radius").get<int>();
    if (doc.contains("timing")) {
      const json& t = doc["timing"];
      s.timing.exchange_j = t.value("exchange_j", s.timing.exchange_j);
      s.timing.rotation_rate = t.value("rotation_rate", s.timing.rotation_rate);
      s.timing.phase_rate = t.value("phase_rate", s.timing.phase_rate);
      s.timing.pi_pulse_duration = t.value("pi_pulse_duration", s.timing.pi_pulse_duration);
      s.timing.readout_duration = t.value("readout_duration", s.timing.readout_duration);
    }
    std::size_t idx = 0;
    for (const json& j : doc.at("events")) {
      Event e;
      e.start_time = time_value(j, "start_time");
      e.duration = time_value(j, "duration");
      const auto kind = j.at("kind").get<std::string>();
      const auto k = event_kind_from_string(kind);
      if (!k) throw ParseError(fmt::format("event {}: unknown kind '{}'", idx, kind));
      e.kind = *k;
      e.cell = j.at("cell").get<std::size_t>();
      e.ancilla = j.at("ancilla").get<int>();
      e.theta = j.at("theta").get<double>();
      e.phi = j.at("phi").get<double>();
      if (!j.at("frequency_label").is_null()) e.frequency_label = j["frequency_label"].get<int>();
      e.source = j.value("source", 0);
      e.spin_up_only = j.value("spin", std::string("both")) == "up";
      if (j.contains("partner")) e.partner = j["partner"].get<std::size_t>();
      e.partner_ancilla = j.value("partner_ancilla", 0);
      if (j.contains("axis")) e.axis = axis_from(j["axis"].get<std::string>());
      s.events.push_back(e);
      ++idx;
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("schedule JSON: ") + e.what());
  }
}

}  // namespace ancnet::network
