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

#include "dualsim/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "dualsim/error.hpp"

namespace dualsim {

namespace {

using nlohmann::json;

constexpr const char* kScenarioSchema = "dualsim-scenario/1";
constexpr const char* kReportSchema = "dualsim-report/1";

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
    throw Error(ErrorCode::kSchema,
                "at " + (path.empty() ? std::string("/") : path) + ": " + message);
}

void check_keys(const json& object, const std::string& path,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.count(key)) {
            schema_fail(path + "/" + key, "unknown key");
        }
    }
}

const json* find_member(const json& object, const char* key) {
    auto it = object.find(key);
    return it == object.end() ? nullptr : &*it;
}

const json& member(const json& object, const std::string& path, const char* key) {
    const json* value = find_member(object, key);
    if (value == nullptr) {
        schema_fail(path + "/" + key, "missing required key");
    }
    return *value;
}

double as_number(const json& value, const std::string& path) {
    if (!value.is_number()) {
        schema_fail(path, "expected a number");
    }
    return value.get<double>();
}

int as_int(const json& value, const std::string& path) {
    if (!value.is_number_integer()) {
        schema_fail(path, "expected an integer");
    }
    return value.get<int>();
}

std::string as_string(const json& value, const std::string& path) {
    if (!value.is_string()) {
        schema_fail(path, "expected a string");
    }
    return value.get<std::string>();
}

const json& as_array(const json& value, const std::string& path) {
    if (!value.is_array()) {
        schema_fail(path, "expected an array");
    }
    return value;
}

const json& as_object(const json& value, const std::string& path) {
    if (!value.is_object()) {
        schema_fail(path, "expected an object");
    }
    return value;
}

// A complex entry is either a bare real number or a [re, im] pair.
Complex as_complex(const json& value, const std::string& path) {
    if (value.is_number()) {
        return Complex(value.get<double>(), 0.0);
    }
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return Complex(value[0].get<double>(), value[1].get<double>());
    }
    schema_fail(path, "expected a number or a [re, im] pair");
}

std::string indexed(const std::string& path, std::size_t i) {
    return path + "/" + std::to_string(i);
}

ScheduleStep::Kind parse_step_kind(const std::string& text, const std::string& path) {
    if (text == "interact") {
        return ScheduleStep::Kind::kInteract;
    }
    if (text == "reverse") {
        return ScheduleStep::Kind::kReverse;
    }
    if (text == "free") {
        return ScheduleStep::Kind::kFree;
    }
    schema_fail(path, "expected \"interact\", \"reverse\" or \"free\"");
}

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

}  // namespace

MeasurementScenario parse_scenario(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // Turn nlohmann's byte offset into a line:column anchor.
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        byte = std::min(byte, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorCode::kSchema, "line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + e.what());
    }
    if (!root.is_object()) {
        schema_fail("", "scenario must be a JSON object");
    }
    check_keys(root, "",
               {"schema", "name", "system", "input_kind", "observers", "pointer_df_count",
                "schedule", "s_final_map", "free_hamiltonian", "interaction_mode",
                "dimension_cap"});
    if (as_string(member(root, "", "schema"), "/schema") != kScenarioSchema) {
        schema_fail("/schema", std::string("expected \"") + kScenarioSchema + "\"");
    }

    ScenarioDefinition def;
    if (const json* name = find_member(root, "name")) {
        def.name = as_string(*name, "/name");
    }

    const json& system = as_object(member(root, "", "system"), "/system");
    check_keys(system, "/system", {"amplitudes"});
    const json& amplitudes = as_array(member(system, "/system", "amplitudes"),
                                      "/system/amplitudes");
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        def.amplitudes.push_back(
            as_complex(amplitudes[i], indexed("/system/amplitudes", i)));
    }

    if (const json* kind = find_member(root, "input_kind")) {
        const std::string value = as_string(*kind, "/input_kind");
        if (value == "pure") {
            def.input_kind = InputKind::kPure;
        } else if (value == "mixed") {
            def.input_kind = InputKind::kMixed;
        } else {
            schema_fail("/input_kind", "expected \"pure\" or \"mixed\"");
        }
    }

    const json& observers = as_array(member(root, "", "observers"), "/observers");
    for (std::size_t i = 0; i < observers.size(); ++i) {
        const std::string path = indexed("/observers", i);
        const json& entry = as_object(observers[i], path);
        check_keys(entry, path, {"label", "pointer_eigenvalues"});
        ObserverSpec spec;
        spec.label = as_string(member(entry, path, "label"), path + "/label");
        if (const json* eigen = find_member(entry, "pointer_eigenvalues")) {
            const json& values = as_array(*eigen, path + "/pointer_eigenvalues");
            for (std::size_t k = 0; k < values.size(); ++k) {
                spec.pointer_eigenvalues.push_back(
                    as_number(values[k], indexed(path + "/pointer_eigenvalues", k)));
            }
        } else {
            // Default readings 1..m, matching the outcome indices.
            for (std::size_t k = 0; k < def.amplitudes.size(); ++k) {
                spec.pointer_eigenvalues.push_back(static_cast<double>(k + 1));
            }
        }
        def.observers.push_back(std::move(spec));
    }

    if (const json* df = find_member(root, "pointer_df_count")) {
        def.pointer_df_count = as_int(*df, "/pointer_df_count");
    }
    if (const json* cap = find_member(root, "dimension_cap")) {
        def.dimension_cap = as_int(*cap, "/dimension_cap");
    }

    const json& schedule = as_array(member(root, "", "schedule"), "/schedule");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const std::string path = indexed("/schedule", i);
        const json& entry = as_object(schedule[i], path);
        check_keys(entry, path, {"kind", "observer", "t_start", "t_end"});
        ScheduleStep step;
        step.kind = parse_step_kind(as_string(member(entry, path, "kind"), path + "/kind"),
                                    path + "/kind");
        if (const json* observer = find_member(entry, "observer")) {
            step.observer = as_string(*observer, path + "/observer");
        }
        step.t_start = as_number(member(entry, path, "t_start"), path + "/t_start");
        step.t_end = as_number(member(entry, path, "t_end"), path + "/t_end");
        def.schedule.push_back(std::move(step));
    }

    if (const json* map = find_member(root, "s_final_map")) {
        const json& rows = as_array(*map, "/s_final_map");
        const std::size_t d = rows.size();
        Eigen::MatrixXcd m(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            const std::string row_path = indexed("/s_final_map", r);
            const json& row = as_array(rows[r], row_path);
            if (row.size() != d) {
                schema_fail(row_path, "matrix rows must all have the same length");
            }
            for (std::size_t c = 0; c < d; ++c) {
                m(static_cast<int>(r), static_cast<int>(c)) =
                    as_complex(row[c], indexed(row_path, c));
            }
        }
        def.s_final_map = std::move(m);
    }

    if (const json* free_h = find_member(root, "free_hamiltonian")) {
        const json& entry = as_object(*free_h, "/free_hamiltonian");
        check_keys(entry, "/free_hamiltonian", {"s_energies", "s_coupling", "pointer_energies"});
        FreeHamiltonianSpec spec;
        if (const json* energies = find_member(entry, "s_energies")) {
            const json& values = as_array(*energies, "/free_hamiltonian/s_energies");
            for (std::size_t k = 0; k < values.size(); ++k) {
                spec.s_energies.push_back(
                    as_number(values[k], indexed("/free_hamiltonian/s_energies", k)));
            }
        }
        if (const json* coupling = find_member(entry, "s_coupling")) {
            spec.s_coupling = as_number(*coupling, "/free_hamiltonian/s_coupling");
        }
        if (const json* energies = find_member(entry, "pointer_energies")) {
            const json& values = as_array(*energies, "/free_hamiltonian/pointer_energies");
            for (std::size_t k = 0; k < values.size(); ++k) {
                spec.pointer_energies.push_back(
                    as_number(values[k], indexed("/free_hamiltonian/pointer_energies", k)));
            }
        }
        def.free_hamiltonian = std::move(spec);
    }

    if (const json* mode = find_member(root, "interaction_mode")) {
        const std::string value = as_string(*mode, "/interaction_mode");
        if (value == "unitary") {
            def.interaction_mode = InteractionMode::kUnitary;
        } else if (value == "hamiltonian") {
            def.interaction_mode = InteractionMode::kHamiltonian;
        } else {
            schema_fail("/interaction_mode", "expected \"unitary\" or \"hamiltonian\"");
        }
    }

    return MeasurementScenario(std::move(def));
}

MeasurementScenario parse_scenario_file(const std::string& path) {
    return parse_scenario(read_text_file(path));
}

std::string serialize_scenario(const MeasurementScenario& scenario) {
    const ScenarioDefinition& def = scenario.definition();
    json root;
    root["schema"] = kScenarioSchema;
    root["name"] = def.name;
    json amplitudes = json::array();
    for (const Complex& a : def.amplitudes) {
        amplitudes.push_back(complex_to_json(a));
    }
    root["system"] = json{{"amplitudes", std::move(amplitudes)}};
    root["input_kind"] = def.input_kind == InputKind::kPure ? "pure" : "mixed";
    json observers = json::array();
    for (const ObserverSpec& obs : def.observers) {
        observers.push_back(
            json{{"label", obs.label}, {"pointer_eigenvalues", obs.pointer_eigenvalues}});
    }
    root["observers"] = std::move(observers);
    root["pointer_df_count"] = def.pointer_df_count;
    json schedule = json::array();
    for (const ScheduleStep& step : def.schedule) {
        json entry;
        entry["kind"] = step_kind_name(step.kind);
        if (!step.observer.empty()) {
            entry["observer"] = step.observer;
        }
        entry["t_start"] = step.t_start;
        entry["t_end"] = step.t_end;
        schedule.push_back(std::move(entry));
    }
    root["schedule"] = std::move(schedule);
    if (def.s_final_map) {
        json rows = json::array();
        for (int r = 0; r < def.s_final_map->rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < def.s_final_map->cols(); ++c) {
                row.push_back(complex_to_json((*def.s_final_map)(r, c)));
            }
            rows.push_back(std::move(row));
        }
        root["s_final_map"] = std::move(rows);
    }
    if (def.free_hamiltonian) {
        json entry;
        entry["s_energies"] = def.free_hamiltonian->s_energies;
        entry["s_coupling"] = def.free_hamiltonian->s_coupling;
        entry["pointer_energies"] = def.free_hamiltonian->pointer_energies;
        root["free_hamiltonian"] = std::move(entry);
    }
    root["interaction_mode"] =
        def.interaction_mode == InteractionMode::kUnitary ? "unitary" : "hamiltonian";
    root["dimension_cap"] = def.dimension_cap;
    return root.dump(2) + "\n";
}

std::string report_to_json(const ExperimentReport& report) {
    json root;
    root["schema"] = kReportSchema;
    root["experiment"] = report.experiment;
    root["scenario_name"] = report.scenario_name;
    root["scenario_digest"] = report.scenario_digest;
    root["master_seed"] = report.master_seed;
    root["events"] = report.event_count;
    json summaries = json::array();
    for (const SummaryStat& s : report.summaries) {
        summaries.push_back(
            json{{"name", s.name}, {"value", s.value}, {"std_error", s.std_error}});
    }
    root["summaries"] = std::move(summaries);
    json verdicts = json::array();
    for (const ClaimVerdict& v : report.verdicts) {
        verdicts.push_back(json{
            {"id", v.id},
            {"description", v.description},
            {"claimed", v.claimed},
            {"measured", v.measured},
            {"tolerance", v.tolerance},
            {"comparison", v.comparison == Comparison::kAbsDiff ? "abs_diff" : "greater_than"},
            {"pass", v.pass},
        });
    }
    root["verdicts"] = std::move(verdicts);
    root["all_pass"] = report.all_pass();
    return root.dump(2) + "\n";
}

std::string report_to_text(const ExperimentReport& report) {
    std::ostringstream out;
    char buffer[128];
    out << "experiment: " << report.experiment << "\n";
    out << "scenario:   " << (report.scenario_name.empty() ? "(unnamed)" : report.scenario_name)
        << " (digest " << report.scenario_digest << ")\n";
    out << "seed:       " << report.master_seed << "   events: " << report.event_count << "\n";
    out << "summaries:\n";
    for (const SummaryStat& s : report.summaries) {
        std::snprintf(buffer, sizeof(buffer), "  %-28s %.10g", s.name.c_str(), s.value);
        out << buffer;
        if (s.std_error != 0.0) {
            std::snprintf(buffer, sizeof(buffer), " +- %.3g", s.std_error);
            out << buffer;
        }
        out << "\n";
    }
    out << "claims:\n";
    for (const ClaimVerdict& v : report.verdicts) {
        const char* relation = v.comparison == Comparison::kAbsDiff ? "=" : ">";
        std::snprintf(buffer, sizeof(buffer), "  [%s] %-36s measured %.10g %s %.10g",
                      v.pass ? "PASS" : "FAIL", v.id.c_str(), v.measured, relation, v.claimed);
        out << buffer;
        if (v.comparison == Comparison::kAbsDiff) {
            std::snprintf(buffer, sizeof(buffer), " (tol %.3g)", v.tolerance);
            out << buffer;
        }
        out << "\n";
    }
    std::size_t passed = 0;
    for (const ClaimVerdict& v : report.verdicts) {
        passed += v.pass ? 1 : 0;
    }
    out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/"
        << report.verdicts.size() << " claims)\n";
    return out.str();
}

std::string event_record_to_json_line(const EventRecord& record) {
    json line;
    line["event"] = record.event_index;
    line["seed"] = record.rng_seed;
    json steps = json::array();
    for (const EventRecord::StepOutcome& s : record.step_outcomes) {
        steps.push_back(json::array({s.step_index, s.observer_label, s.outcome_index}));
    }
    line["steps"] = std::move(steps);
    line["final"] = record.final_records;
    line["scalars"] = record.scalars;
    return line.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
    }
    std::ostringstream content;
    content << in.rdbuf();
    require(!in.bad(), ErrorCode::kIo, "failed reading '" + path + "'");
    return content.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    require(out.good(), ErrorCode::kIo, "failed writing '" + path + "'");
}

}  // namespace dualsim
