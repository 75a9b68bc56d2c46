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

#include <cstdint>
#include <iosfwd>
#include <string>

namespace dualsim {

// One resolved invocation of the front end (command line plus environment
// already folded in by the caller).
struct RunConfig {
    std::string scenario_path;
    std::string experiment;
    std::int64_t events = 100000;
    std::uint64_t seed = 1;
    std::string out_dir;        // empty: print to stdout only
    bool emit_events = false;   // also produce the per-event JSON lines
    std::string format = "json";  // "json", "text" or "both"
};

// Runs one experiment end to end: parse the scenario, execute, render the
// report (and event log when requested) either into out_dir or onto `out`.
//
// Exit status: 0 when every claim passed, 2 when the experiment ran but at
// least one claim failed, 1 for any input problem (bad file, bad schema,
// unknown experiment, unsupported scenario, ...).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config);

}  // namespace dualsim
