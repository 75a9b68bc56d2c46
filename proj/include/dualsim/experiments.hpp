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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dualsim/engine.hpp"
#include "dualsim/scenario.hpp"

namespace dualsim {

// How a claim's measured value is judged against its claimed value.
enum class Comparison {
    kAbsDiff,      // pass iff |measured - claimed| <= tolerance
    kGreaterThan,  // pass iff measured > claimed
};

struct ClaimVerdict {
    std::string id;
    std::string description;
    double claimed = 0.0;
    double measured = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::kAbsDiff;
    bool pass = false;
};

struct SummaryStat {
    std::string name;
    double value = 0.0;
    double std_error = 0.0;  // 0 for exact (non-sampled) quantities
};

// Outcome of one experiment run: summary statistics plus one verdict per
// claim the experiment makes. Reports carry no timestamps or hostnames, so
// rerunning a configuration reproduces the report byte for byte.
struct ExperimentReport {
    std::string experiment;
    std::string scenario_name;
    std::string scenario_digest;
    std::uint64_t master_seed = 0;
    std::int64_t event_count = 0;
    std::vector<SummaryStat> summaries;
    std::vector<ClaimVerdict> verdicts;

    bool all_pass() const;
};

// Collapse statistics for a single-observer scenario: runs `events` sampled
// events and checks the final record frequencies against the analytic record
// distribution (4 sigma), plus the mean pointer reading.
// Claims: collapse.freq[j] for every record value j, collapse.mean_pointer.
ExperimentReport run_collapse_statistics(const MeasurementScenario& scenario,
                                         std::int64_t events, std::uint64_t master_seed,
                                         std::vector<EventRecord>* event_log = nullptr);

// Interference witness for a binary single-observer scenario. Applies the
// premeasurement coupling to the pure and to the mixed input and compares
// the witness expectation on both; also checks that the witness fails to
// commute with the pointer observable (which is why no recorded observer can
// measure it).
// Claims: interference.pure, interference.mixed, interference.noncommuting.
ExperimentReport run_interference_test(const MeasurementScenario& scenario);

// Measurement undoing for a pure single-observer scenario with schedule
// [interact, reverse, interact]: after the reversal the composite state must
// return to the input (fidelity 1) and the record to ready in every event,
// and the record drawn after the repeated interaction must be statistically
// independent of the first one.
// Claims: undoing.fidelity_restored, undoing.ready_after_reversal,
// undoing.independence[i,j] for outcomes i, j.
ExperimentReport run_undoing(const MeasurementScenario& scenario, std::int64_t events,
                             std::uint64_t master_seed,
                             std::vector<EventRecord>* event_log = nullptr);

// Sequential two-observer chain (schedule [interact O, interact O']): the
// final joint record distribution must be diagonal with the Born weights,
// the two records must agree in every single event, and between the two
// interactions the first pair still shows interference (no collapse has
// happened for the second observer).
// Claims: two_observer.joint_offdiag, two_observer.joint_diag[j],
// two_observer.interference_before_second, two_observer.interference_nonzero,
// two_observer.mid_ready, two_observer.agreement, two_observer.joint_freq[i].
ExperimentReport run_two_observer(const MeasurementScenario& scenario, std::int64_t events,
                                  std::uint64_t master_seed,
                                  std::vector<EventRecord>* event_log = nullptr);

// Restricted-state comparison for a single-observer interact scenario: the
// observer's reduced pointer state is identical for the pure and the mixed
// input (statistically no collapse is detectable), while in every individual
// event the recorded pointer state differs from the ensemble one by trace
// distance 1 - |a_l|^2.
// Claims: breuer.statistical_indistinguishable, breuer.event_distance,
// breuer.event_differs.
ExperimentReport run_breuer_check(const MeasurementScenario& scenario, std::int64_t events,
                                  std::uint64_t master_seed,
                                  std::vector<EventRecord>* event_log = nullptr);

// Uniform callable signature for the registry (deterministic experiments
// ignore the event count and seed).
using ExperimentFn = std::function<ExperimentReport(
    const MeasurementScenario&, std::int64_t, std::uint64_t, std::vector<EventRecord>*)>;

// Name -> runner, in stable presentation order.
const std::vector<std::pair<std::string, ExperimentFn>>& experiment_registry();

// Runner lookup; throws an argument error listing valid names when unknown.
const ExperimentFn& find_experiment(const std::string& name);

}  // namespace dualsim
