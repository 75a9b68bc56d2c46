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

#include <CLI11.hpp>

#include "dualsim/cli.hpp"

int main(int argc, char** argv) {
    dualsim::RunConfig config;
    CLI::App app{"dualsim — dual event-state simulator for entangling quantum measurements"};
    app.add_option("scenario", config.scenario_path, "scenario file (JSON)")->required();
    app.add_option("-x,--experiment", config.experiment,
                   "experiment to run: collapse, interference, undoing, two-observer, breuer")
        ->required();
    app.add_option("-n,--events", config.events, "number of sampled events")
        ->capture_default_str();
    app.add_option("-s,--seed", config.seed, "master seed for the per-event substreams")
        ->envname("DUALSIM_SEED")
        ->capture_default_str();
    app.add_option("-o,--out", config.out_dir,
                   "output directory for report.json / report.txt / events.jsonl")
        ->envname("DUALSIM_OUT");
    app.add_flag("--emit-events", config.emit_events, "also write per-event JSON lines");
    app.add_option("--format", config.format, "report format")
        ->check(CLI::IsMember({"json", "text", "both"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep the contract simple: anything but a clean --help is an input
        // error (exit 1); CLI11's own exit codes stay internal.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return dualsim::run(config);
}
