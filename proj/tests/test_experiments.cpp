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

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "checks.hpp"
#include "dualsim/error.hpp"
#include "dualsim/experiments.hpp"
#include "dualsim/io.hpp"
#include "dualsim/scenario.hpp"
#include "reference.hpp"

using namespace dualsim;
using testutil::check_error;

namespace {

ScenarioDefinition binary_def() {
    ScenarioDefinition def;
    def.name = "exp-binary";
    def.amplitudes = {Complex(0.6, 0.0), Complex(0.8, 0.0)};
    def.observers.push_back({"O", {1.0, 2.0}});
    def.schedule.push_back({ScheduleStep::Kind::kInteract, "O", 0.0, 1.0});
    return def;
}

ScenarioDefinition undoing_def() {
    ScenarioDefinition def = binary_def();
    def.name = "exp-undoing";
    def.schedule.push_back({ScheduleStep::Kind::kReverse, "O", 1.0, 2.0});
    def.schedule.push_back({ScheduleStep::Kind::kInteract, "O", 2.0, 3.0});
    return def;
}

ScenarioDefinition two_observer_def() {
    ScenarioDefinition def = binary_def();
    def.name = "exp-two-observer";
    def.observers.push_back({"P", {1.0, 2.0}});
    def.schedule.push_back({ScheduleStep::Kind::kInteract, "P", 1.0, 2.0});
    return def;
}

const ClaimVerdict& verdict_by_id(const ExperimentReport& report, const std::string& id) {
    for (const ClaimVerdict& v : report.verdicts) {
        if (v.id == id) {
            return v;
        }
    }
    REQUIRE_MESSAGE(false, "no verdict with id " << id);
    static ClaimVerdict missing;
    return missing;
}

std::vector<std::string> log_lines(const std::vector<EventRecord>& log) {
    std::vector<std::string> lines;
    for (const EventRecord& record : log) {
        lines.push_back(event_record_to_json_line(record));
    }
    return lines;
}

}  // namespace

TEST_CASE("collapse statistics pass on the pure and the mixed input") {
    for (const bool mixed : {false, true}) {
        ScenarioDefinition def = binary_def();
        def.input_kind = mixed ? InputKind::kMixed : InputKind::kPure;
        const MeasurementScenario scenario(def);
        const ExperimentReport report = run_collapse_statistics(scenario, 2000, 1);
        CHECK(report.all_pass());
        CHECK(report.experiment == "collapse");
        CHECK(report.event_count == 2000);
        CHECK(report.verdicts.size() == 4);  // freq[0..2] plus the mean reading

        const ClaimVerdict& ready = verdict_by_id(report, "collapse.freq[0]");
        CHECK(ready.claimed == 0.0);
        CHECK(ready.measured == 0.0);
        CHECK(verdict_by_id(report, "collapse.freq[1]").claimed ==
              doctest::Approx(0.36).epsilon(1e-12));
        CHECK(verdict_by_id(report, "collapse.freq[2]").claimed ==
              doctest::Approx(0.64).epsilon(1e-12));
        // Ensemble mean reading: 1 * 0.36 + 2 * 0.64.
        CHECK(verdict_by_id(report, "collapse.mean_pointer").claimed ==
              doctest::Approx(1.64).epsilon(1e-12));
    }
}

TEST_CASE("collapse statistics cover ternary scenarios") {
    ScenarioDefinition def = binary_def();
    def.name = "exp-ternary";
    def.amplitudes = {Complex(0.36, 0.0), Complex(0.0, 0.48), Complex(0.8, 0.0)};
    def.observers[0].pointer_eigenvalues = {1.0, 2.0, 3.0};
    const MeasurementScenario scenario(def);
    const ExperimentReport report = run_collapse_statistics(scenario, 3000, 5);
    CHECK(report.all_pass());
    CHECK(report.verdicts.size() == 5);
    CHECK(verdict_by_id(report, "collapse.freq[1]").claimed ==
          doctest::Approx(0.1296).epsilon(1e-12));
    CHECK(verdict_by_id(report, "collapse.freq[2]").claimed ==
          doctest::Approx(0.2304).epsilon(1e-12));
    CHECK(verdict_by_id(report, "collapse.freq[3]").claimed ==
          doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("interference report certifies the witness split") {
    const MeasurementScenario scenario(binary_def());
    const ExperimentReport report = run_interference_test(scenario);
    CHECK(report.all_pass());
    CHECK(report.verdicts.size() == 3);
    CHECK(verdict_by_id(report, "interference.pure").measured ==
          doctest::Approx(0.96).epsilon(1e-12));
    CHECK(verdict_by_id(report, "interference.mixed").measured ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(verdict_by_id(report, "interference.noncommuting").measured ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a system map that moves the branches fails the pure claim honestly") {
    ScenarioDefinition def = binary_def();
    Eigen::MatrixXcd flip(2, 2);
    flip << 0, 1, 1, 0;
    def.s_final_map = flip;
    const MeasurementScenario scenario(def);
    const ExperimentReport report = run_interference_test(scenario);
    CHECK(!report.all_pass());
    const ClaimVerdict& pure = verdict_by_id(report, "interference.pure");
    CHECK(!pure.pass);
    CHECK(pure.claimed == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(std::abs(pure.measured) < 1e-12);
    CHECK(verdict_by_id(report, "interference.mixed").pass);
    CHECK(verdict_by_id(report, "interference.noncommuting").pass);
}

TEST_CASE("undoing passes with factorizing repeat statistics") {
    const MeasurementScenario scenario(undoing_def());
    const ExperimentReport report = run_undoing(scenario, 2000, 9);
    CHECK(report.all_pass());
    CHECK(report.verdicts.size() == 6);  // fidelity, ready, independence[i,j]
    CHECK(verdict_by_id(report, "undoing.fidelity_restored").measured ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(verdict_by_id(report, "undoing.ready_after_reversal").measured == 1.0);
    CHECK(verdict_by_id(report, "undoing.independence[1,1]").claimed ==
          doctest::Approx(0.1296).epsilon(1e-12));
    CHECK(verdict_by_id(report, "undoing.independence[2,2]").claimed ==
          doctest::Approx(0.4096).epsilon(1e-12));
}

TEST_CASE("two-observer chain certifies agreement and mid-schedule interference") {
    const MeasurementScenario scenario(two_observer_def());
    const ExperimentReport report = run_two_observer(scenario, 1000, 3);
    CHECK(report.all_pass());
    CHECK(report.verdicts.size() == 10);
    CHECK(verdict_by_id(report, "two_observer.joint_offdiag").measured < 1e-12);
    CHECK(verdict_by_id(report, "two_observer.joint_diag[1]").measured ==
          doctest::Approx(0.36).epsilon(1e-10));
    CHECK(verdict_by_id(report, "two_observer.joint_diag[2]").measured ==
          doctest::Approx(0.64).epsilon(1e-10));
    CHECK(verdict_by_id(report, "two_observer.interference_before_second").measured ==
          doctest::Approx(0.96).epsilon(1e-10));
    CHECK(verdict_by_id(report, "two_observer.agreement").measured == 1.0);
    CHECK(verdict_by_id(report, "two_observer.mid_ready").measured == 1.0);
}

TEST_CASE("restricted-state check matches the per-event distances") {
    const MeasurementScenario scenario(binary_def());
    const ExperimentReport report = run_breuer_check(scenario, 500, 21);
    CHECK(report.all_pass());
    CHECK(report.verdicts.size() == 3);
    CHECK(verdict_by_id(report, "breuer.statistical_indistinguishable").measured < 1e-12);
    CHECK(verdict_by_id(report, "breuer.event_distance").measured < 1e-9);
    CHECK(verdict_by_id(report, "breuer.event_differs").measured == 1.0);

    // The per-event distances themselves: 1 - |a_l|^2 for the drawn l.
    std::vector<EventRecord> log;
    run_breuer_check(scenario, 50, 21, &log);
    REQUIRE(log.size() == 50);
    for (const EventRecord& record : log) {
        const double distance = record.scalars.at("restricted_distance");
        const int l = record.final_records.at("O");
        const double expected = l == 1 ? 0.64 : 0.36;
        CHECK(std::abs(distance - expected) < 1e-9);
    }
}

TEST_CASE("experiments are deterministic in all reported digits") {
    const MeasurementScenario scenario(undoing_def());
    std::vector<EventRecord> log_a;
    std::vector<EventRecord> log_b;
    const ExperimentReport a = run_undoing(scenario, 300, 77, &log_a);
    const ExperimentReport b = run_undoing(scenario, 300, 77, &log_b);

    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].id == b.verdicts[i].id);
        CHECK(a.verdicts[i].measured == b.verdicts[i].measured);
        CHECK(a.verdicts[i].pass == b.verdicts[i].pass);
    }
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_text(a) == report_to_text(b));
    CHECK(log_lines(log_a) == log_lines(log_b));
}

TEST_CASE("experiments reject scenarios outside their domain") {
    const MeasurementScenario binary(binary_def());
    const MeasurementScenario two(two_observer_def());
    const MeasurementScenario undoing(undoing_def());

    check_error([&] { run_collapse_statistics(binary, 0, 1); }, ErrorCode::kArgument);
    check_error([&] { run_collapse_statistics(two, 100, 1); },
                ErrorCode::kUnsupportedScenario);
    check_error([&] { run_interference_test(two); }, ErrorCode::kUnsupportedScenario);
    check_error([&] { run_undoing(binary, 100, 1); }, ErrorCode::kUnsupportedScenario);
    check_error([&] { run_two_observer(binary, 100, 1); }, ErrorCode::kUnsupportedScenario);
    check_error([&] { run_breuer_check(undoing, 100, 1); }, ErrorCode::kUnsupportedScenario);

    {
        ScenarioDefinition def = undoing_def();
        def.input_kind = InputKind::kMixed;
        check_error([&] { run_undoing(MeasurementScenario(def), 100, 1); },
                    ErrorCode::kUnsupportedScenario);
    }
    {
        // Interference needs a binary system.
        ScenarioDefinition def = binary_def();
        def.amplitudes = {Complex(0.36, 0.0), Complex(0.48, 0.0), Complex(0.8, 0.0)};
        def.observers[0].pointer_eigenvalues = {1.0, 2.0, 3.0};
        check_error([&] { run_interference_test(MeasurementScenario(def)); },
                    ErrorCode::kUnsupportedScenario);
    }
    {
        // The restricted-state check degenerates with a single branch.
        ScenarioDefinition def = binary_def();
        def.amplitudes = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
        check_error([&] { run_breuer_check(MeasurementScenario(def), 100, 1); },
                    ErrorCode::kUnsupportedScenario);
    }
}

TEST_CASE("the registry lists the runnable experiments in order") {
    const auto& registry = experiment_registry();
    REQUIRE(registry.size() == 5);
    CHECK(registry[0].first == "collapse");
    CHECK(registry[1].first == "interference");
    CHECK(registry[2].first == "undoing");
    CHECK(registry[3].first == "two-observer");
    CHECK(registry[4].first == "breuer");

    const MeasurementScenario scenario(binary_def());
    // The uniform signature ignores events and seed where they play no role.
    const ExperimentReport report = find_experiment("interference")(scenario, 123, 456, nullptr);
    CHECK(report.experiment == "interference");
    CHECK(report.event_count == 0);

    check_error([] { find_experiment("nope"); }, ErrorCode::kArgument);
    try {
        find_experiment("nope");
    } catch (const Error& e) {
        const std::string what = e.what();
        CHECK(what.find("collapse") != std::string::npos);
        CHECK(what.find("breuer") != std::string::npos);
    }
}

TEST_CASE("event logs carry one replayable line per event") {
    const MeasurementScenario scenario(binary_def());
    std::vector<EventRecord> log;
    run_collapse_statistics(scenario, 40, 13, &log);
    REQUIRE(log.size() == 40);
    for (std::size_t n = 0; n < log.size(); ++n) {
        CHECK(log[n].event_index == n);
        CHECK(log[n].rng_seed == CounterRng(13, n).stream_key());
        CHECK(log[n].final_records.count("O") == 1);
        CHECK(log[n].step_outcomes.size() == 1);
    }
}
