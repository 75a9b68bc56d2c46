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

#include "dualsim/cli.hpp"

#include <filesystem>
#include <iostream>

#include "dualsim/error.hpp"
#include "dualsim/experiments.hpp"
#include "dualsim/io.hpp"

namespace dualsim {

namespace {

std::string events_to_text(const std::vector<EventRecord>& events) {
    std::string text;
    for (const EventRecord& record : events) {
        text += event_record_to_json_line(record);
        text += '\n';
    }
    return text;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        require(config.format == "json" || config.format == "text" || config.format == "both",
                ErrorCode::kArgument,
                "format must be \"json\", \"text\" or \"both\", got \"" + config.format + "\"");
        require(!config.scenario_path.empty(), ErrorCode::kArgument, "no scenario file given");
        require(!config.experiment.empty(), ErrorCode::kArgument, "no experiment given");

        const ExperimentFn& experiment = find_experiment(config.experiment);
        const MeasurementScenario scenario = parse_scenario_file(config.scenario_path);

        std::vector<EventRecord> events;
        const ExperimentReport report = experiment(
            scenario, config.events, config.seed, config.emit_events ? &events : nullptr);

        const bool want_json = config.format == "json" || config.format == "both";
        const bool want_text = config.format == "text" || config.format == "both";
        if (config.out_dir.empty()) {
            if (want_text) {
                out << report_to_text(report);
            }
            if (want_json) {
                out << report_to_json(report);
            }
            if (config.emit_events) {
                out << events_to_text(events);
            }
        } else {
            std::error_code fs_error;
            std::filesystem::create_directories(config.out_dir, fs_error);
            require(!fs_error, ErrorCode::kIo,
                    "cannot create output directory '" + config.out_dir + "': " +
                        fs_error.message());
            const std::filesystem::path dir(config.out_dir);
            if (want_json) {
                write_text_file((dir / "report.json").string(), report_to_json(report));
            }
            if (want_text) {
                write_text_file((dir / "report.txt").string(), report_to_text(report));
            }
            if (config.emit_events) {
                write_text_file((dir / "events.jsonl").string(), events_to_text(events));
            }
            out << report_to_text(report);
        }
        return report.all_pass() ? 0 : 2;
    } catch (const Error& e) {
        err << "dualsim: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "dualsim: " << e.what() << "\n";
        return 1;
    }
}

int run(const RunConfig& config) {
    return run(config, std::cout, std::cerr);
}

}  // namespace dualsim
