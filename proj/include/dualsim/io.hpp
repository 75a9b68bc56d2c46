// Copyright 2026 The dualsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "dualsim/engine.hpp"
#include "dualsim/experiments.hpp"
#include "dualsim/scenario.hpp"

namespace dualsim {

// Parses a scenario from JSON text (schema "dualsim-scenario/1"). Syntax
// errors are reported with line and column; schema and semantic errors with
// the JSON path of the offending field.
MeasurementScenario parse_scenario(const std::string& text);
MeasurementScenario parse_scenario_file(const std::string& path);

// Canonical JSON form of a scenario. parse_scenario(serialize_scenario(s))
// reproduces s exactly.
std::string serialize_scenario(const MeasurementScenario& scenario);

// Report renderers. Both are fully deterministic: reports carry no
// timestamps, so identical runs serialize identically.
std::string report_to_json(const ExperimentReport& report);
std::string report_to_text(const ExperimentReport& report);

// One event as a single JSON line (the event-log format).
std::string event_record_to_json_line(const EventRecord& record);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dualsim
