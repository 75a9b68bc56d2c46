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

#include "dualsim/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "dualsim/algebra.hpp"
#include "dualsim/error.hpp"

namespace dualsim {

namespace {

// Claim tolerances. The exact-arithmetic claims are pinned tight; sampled
// frequencies get the usual 4 sigma binomial band.
constexpr double kInterferencePureTol = 1e-10;
constexpr double kInterferenceMixedTol = 1e-12;
constexpr double kCommutatorFloor = 0.1;
constexpr double kFidelityTol = 1e-10;
constexpr double kJointDiagonalTol = 1e-12;
constexpr double kStatisticalDistanceTol = 1e-12;
constexpr double kEventDistanceTol = 1e-9;
constexpr double kEventDiffersFloor = 1e-6;

ClaimVerdict abs_claim(std::string id, std::string description, double claimed, double measured,
                       double tolerance) {
    ClaimVerdict v;
    v.id = std::move(id);
    v.description = std::move(description);
    v.claimed = claimed;
    v.measured = measured;
    v.tolerance = tolerance;
    v.comparison = Comparison::kAbsDiff;
    v.pass = std::abs(measured - claimed) <= tolerance;
    return v;
}

ClaimVerdict greater_claim(std::string id, std::string description, double threshold,
                           double measured) {
    ClaimVerdict v;
    v.id = std::move(id);
    v.description = std::move(description);
    v.claimed = threshold;
    v.measured = measured;
    v.tolerance = 0.0;
    v.comparison = Comparison::kGreaterThan;
    v.pass = measured > threshold;
    return v;
}

ExperimentReport base_report(const char* experiment, const MeasurementScenario& scenario,
                             std::int64_t events, std::uint64_t master_seed) {
    ExperimentReport report;
    report.experiment = experiment;
    report.scenario_name = scenario.name();
    report.scenario_digest = scenario.digest();
    report.master_seed = master_seed;
    report.event_count = events;
    return report;
}

double binomial_band(double p, std::int64_t n) {
    return 4.0 * std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

void require_positive_events(std::int64_t events) {
    require(events > 0, ErrorCode::kArgument, "event count must be positive");
}

void require_single_observer(const MeasurementScenario& scenario, const char* experiment) {
    require(scenario.observer_count() == 1, ErrorCode::kUnsupportedScenario,
            std::string(experiment) + " needs exactly one observer");
}

// Checks that the schedule is exactly the given (kind, observer) sequence.
void require_schedule(const MeasurementScenario& scenario,
                      const std::vector<std::pair<ScheduleStep::Kind, std::string>>& expected,
                      const char* experiment) {
    const auto& steps = scenario.schedule().steps();
    bool ok = steps.size() == expected.size();
    for (std::size_t i = 0; ok && i < steps.size(); ++i) {
        ok = steps[i].kind == expected[i].first && steps[i].observer == expected[i].second;
    }
    if (!ok) {
        std::string want;
        for (const auto& [kind, observer] : expected) {
            want += std::string(want.empty() ? "" : ", ") + step_kind_name(kind) +
                    (observer.empty() ? "" : "(" + observer + ")");
        }
        throw Error(ErrorCode::kUnsupportedScenario,
                    std::string(experiment) + " needs the schedule [" + want + "]");
    }
}

std::string bracket(const std::string& stem, int j) {
    return stem + "[" + std::to_string(j) + "]";
}

}  // namespace

bool ExperimentReport::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const ClaimVerdict& v) { return v.pass; });
}

ExperimentReport run_collapse_statistics(const MeasurementScenario& scenario,
                                         std::int64_t events, std::uint64_t master_seed,
                                         std::vector<EventRecord>* event_log) {
    require_positive_events(events);
    require_single_observer(scenario, "collapse statistics");
    bool any_interact = false;
    for (const ScheduleStep& step : scenario.schedule().steps()) {
        any_interact |= (step.kind == ScheduleStep::Kind::kInteract);
    }
    require(any_interact, ErrorCode::kUnsupportedScenario,
            "collapse statistics needs at least one interaction step");

    DualEngine engine(scenario);
    const std::string& label = scenario.observers()[0].label;
    const std::vector<double>& q = scenario.observers()[0].pointer_eigenvalues;

    // Analytic record distribution after the full schedule; the sampled
    // frequencies are judged against it.
    OutcomeDistribution analytic = engine.pointer_distribution(engine.run_unsampled(), label);
    double q_mean = 0.0;
    double q_second = 0.0;
    for (int j = 1; j < analytic.size(); ++j) {
        q_mean += analytic.weights()[j] * q[j - 1];
        q_second += analytic.weights()[j] * q[j - 1] * q[j - 1];
    }
    const double q_var = std::max(0.0, q_second - q_mean * q_mean);

    std::vector<std::int64_t> counts(scenario.pointer_dimension(), 0);
    double q_sum = 0.0;
    for (std::int64_t n = 0; n < events; ++n) {
        EventRecord record;
        DualState final_state = engine.run_event(master_seed, static_cast<std::uint64_t>(n),
                                                 &record);
        const int l = final_state.records.at(label).outcome_index;
        ++counts[l];
        if (l > 0) {
            q_sum += q[l - 1];
        }
        if (event_log != nullptr) {
            event_log->push_back(std::move(record));
        }
    }

    ExperimentReport report = base_report("collapse", scenario, events, master_seed);
    for (int j = 0; j < analytic.size(); ++j) {
        const double p = analytic.weights()[j];
        const double freq = static_cast<double>(counts[j]) / static_cast<double>(events);
        report.verdicts.push_back(abs_claim(
            bracket("collapse.freq", j),
            "final record frequency matches the ensemble weight (4 sigma)", p, freq,
            binomial_band(p, events)));
        report.summaries.push_back(
            {bracket("freq", j), freq, std::sqrt(freq * (1.0 - freq) / events)});
    }
    const double mean_q = q_sum / static_cast<double>(events);
    report.verdicts.push_back(abs_claim(
        "collapse.mean_pointer", "mean pointer reading matches the ensemble mean (4 sigma)",
        q_mean, mean_q, 4.0 * std::sqrt(q_var / static_cast<double>(events))));
    report.summaries.push_back({"mean_pointer", mean_q, std::sqrt(q_var / events)});
    return report;
}

ExperimentReport run_interference_test(const MeasurementScenario& scenario) {
    require_single_observer(scenario, "interference test");
    require(scenario.outcome_count() == 2, ErrorCode::kUnsupportedScenario,
            "interference test needs a binary system");

    const std::string& label = scenario.observers()[0].label;
    const Operator coupling = build_premeasurement_unitary(scenario, label);
    const Operator witness = build_interference_observable(scenario);
    const Operator pointer = pointer_observable(scenario, label);

    const double pure_value =
        expectation(apply_unitary(build_initial_pure(scenario), coupling), witness);
    const double mixed_value =
        expectation(apply_unitary(build_initial_mixed(scenario), coupling), witness);
    const Complex a1 = scenario.amplitudes()[0];
    const Complex a2 = scenario.amplitudes()[1];
    const double claimed_pure = 2.0 * (std::conj(a1) * a2).real();
    const double commutator_norm = spectral_norm(commutator(pointer, witness).entries());

    ExperimentReport report = base_report("interference", scenario, 0, 0);
    report.verdicts.push_back(abs_claim(
        "interference.pure",
        "witness expectation on the premeasured superposition is 2 Re(a1* a2)", claimed_pure,
        pure_value, kInterferencePureTol));
    report.verdicts.push_back(abs_claim(
        "interference.mixed", "witness expectation on the premeasured mixture vanishes", 0.0,
        mixed_value, kInterferenceMixedTol));
    report.verdicts.push_back(greater_claim(
        "interference.noncommuting",
        "witness does not commute with the pointer observable", kCommutatorFloor,
        commutator_norm));
    report.summaries.push_back({"witness_pure", pure_value, 0.0});
    report.summaries.push_back({"witness_mixed", mixed_value, 0.0});
    report.summaries.push_back({"commutator_norm", commutator_norm, 0.0});
    return report;
}

ExperimentReport run_undoing(const MeasurementScenario& scenario, std::int64_t events,
                             std::uint64_t master_seed,
                             std::vector<EventRecord>* event_log) {
    require_positive_events(events);
    require_single_observer(scenario, "undoing");
    require(scenario.input_kind() == InputKind::kPure, ErrorCode::kUnsupportedScenario,
            "undoing needs a pure input state");
    const std::string& label = scenario.observers()[0].label;
    require_schedule(scenario,
                     {{ScheduleStep::Kind::kInteract, label},
                      {ScheduleStep::Kind::kReverse, label},
                      {ScheduleStep::Kind::kInteract, label}},
                     "undoing");

    DualEngine engine(scenario);
    const StateVector psi0 = build_initial_pure(scenario);

    // Analytic record distribution after one interaction; the joint
    // (first record, re-measured record) statistics must factorize into it.
    const DualState unsampled_mid = engine.step(engine.initial_state(), 0, nullptr);
    const OutcomeDistribution analytic =
        engine.pointer_distribution(unsampled_mid.dynamical, label);

    const int m = scenario.outcome_count();
    std::vector<std::vector<std::int64_t>> joint(m + 1, std::vector<std::int64_t>(m + 1, 0));
    double min_fidelity = 1.0;
    std::int64_t ready_count = 0;
    for (std::int64_t n = 0; n < events; ++n) {
        CounterRng rng(master_seed, static_cast<std::uint64_t>(n));
        EventRecord record;
        record.event_index = static_cast<std::uint64_t>(n);
        record.rng_seed = rng.stream_key();

        DualState state = engine.step(engine.initial_state(), 0, &rng, &record);
        const int first = state.records.at(label).outcome_index;

        state = engine.step(state, 1, &rng, &record);
        const double fid = fidelity(std::get<StateVector>(state.dynamical), psi0);
        min_fidelity = std::min(min_fidelity, fid);
        ready_count += state.records.at(label).is_ready() ? 1 : 0;

        state = engine.step(state, 2, &rng, &record);
        const int second = state.records.at(label).outcome_index;
        ++joint[first][second];

        if (event_log != nullptr) {
            record.final_records[label] = second;
            record.scalars["fidelity_after_reversal"] = fid;
            event_log->push_back(std::move(record));
        }
    }

    ExperimentReport report = base_report("undoing", scenario, events, master_seed);
    report.verdicts.push_back(abs_claim(
        "undoing.fidelity_restored",
        "composite state returns to the input after reversal in every event", 1.0, min_fidelity,
        kFidelityTol));
    report.verdicts.push_back(abs_claim(
        "undoing.ready_after_reversal", "record returns to ready in every event", 1.0,
        static_cast<double>(ready_count) / static_cast<double>(events), 0.0));
    double max_dev = 0.0;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const double p = analytic.weights()[i] * analytic.weights()[j];
            const double freq =
                static_cast<double>(joint[i][j]) / static_cast<double>(events);
            max_dev = std::max(max_dev, std::abs(freq - p));
            report.verdicts.push_back(abs_claim(
                "undoing.independence[" + std::to_string(i) + "," + std::to_string(j) + "]",
                "first and re-measured record are independent (4 sigma)", p, freq,
                binomial_band(p, events)));
        }
    }
    report.summaries.push_back({"fidelity_min", min_fidelity, 0.0});
    report.summaries.push_back(
        {"ready_fraction", static_cast<double>(ready_count) / static_cast<double>(events), 0.0});
    report.summaries.push_back({"independence_max_dev", max_dev, 0.0});
    return report;
}

ExperimentReport run_two_observer(const MeasurementScenario& scenario, std::int64_t events,
                                  std::uint64_t master_seed,
                                  std::vector<EventRecord>* event_log) {
    require_positive_events(events);
    require(scenario.observer_count() == 2, ErrorCode::kUnsupportedScenario,
            "two-observer chain needs exactly two observers");
    require(scenario.outcome_count() == 2, ErrorCode::kUnsupportedScenario,
            "two-observer chain needs a binary system");
    require(scenario.input_kind() == InputKind::kPure, ErrorCode::kUnsupportedScenario,
            "two-observer chain needs a pure input state");
    const std::string& first_label = scenario.observers()[0].label;
    const std::string& second_label = scenario.observers()[1].label;
    require_schedule(scenario,
                     {{ScheduleStep::Kind::kInteract, first_label},
                      {ScheduleStep::Kind::kInteract, second_label}},
                     "two-observer chain");

    DualEngine engine(scenario);

    // Deterministic part: the mid-schedule interference witness and the
    // final joint record distribution.
    const DualState mid = engine.step(engine.initial_state(), 0, nullptr);
    const DualState fin = engine.step(mid, 1, nullptr);
    const Operator witness = build_interference_observable(scenario, first_label);
    const double witness_mid = expectation(mid.dynamical, witness);
    const Complex a1 = scenario.amplitudes()[0];
    const Complex a2 = scenario.amplitudes()[1];
    const double claimed_witness = 2.0 * (std::conj(a1) * a2).real();
    const Eigen::MatrixXd joint =
        engine.joint_pointer_distribution(fin.dynamical, first_label, second_label);

    ExperimentReport report = base_report("two-observer", scenario, events, master_seed);
    double offdiag = 0.0;
    for (int i = 0; i < joint.rows(); ++i) {
        for (int j = 0; j < joint.cols(); ++j) {
            if (i != j) {
                offdiag = std::max(offdiag, std::abs(joint(i, j)));
            }
        }
    }
    report.verdicts.push_back(abs_claim(
        "two_observer.joint_offdiag",
        "joint record distribution has no off-diagonal mass", 0.0, offdiag,
        kJointDiagonalTol));
    report.verdicts.push_back(abs_claim("two_observer.joint_diag[0]",
                                        "no joint mass on the ready pair", 0.0, joint(0, 0),
                                        kJointDiagonalTol));
    for (int i = 1; i <= scenario.outcome_count(); ++i) {
        report.verdicts.push_back(abs_claim(
            bracket("two_observer.joint_diag", i),
            "joint diagonal mass equals the Born weight", std::norm(scenario.amplitudes()[i - 1]),
            joint(i, i), kJointDiagonalTol));
    }
    report.verdicts.push_back(abs_claim(
        "two_observer.interference_before_second",
        "witness expectation between the interactions is 2 Re(a1* a2)", claimed_witness,
        witness_mid, kInterferencePureTol));
    if (claimed_witness != 0.0) {
        report.verdicts.push_back(greater_claim(
            "two_observer.interference_nonzero",
            "witness has not collapsed before the second interaction",
            std::abs(claimed_witness) / 2.0, std::abs(witness_mid)));
    }

    // Sampled part: in every event the second record must reproduce the
    // first, and the agreeing pairs follow the Born weights.
    std::int64_t agree_count = 0;
    std::int64_t mid_ready_count = 0;
    std::vector<std::int64_t> pair_counts(scenario.outcome_count() + 1, 0);
    for (std::int64_t n = 0; n < events; ++n) {
        CounterRng rng(master_seed, static_cast<std::uint64_t>(n));
        EventRecord record;
        record.event_index = static_cast<std::uint64_t>(n);
        record.rng_seed = rng.stream_key();

        DualState state = engine.step(engine.initial_state(), 0, &rng, &record);
        const int first = state.records.at(first_label).outcome_index;
        const bool mid_ok = first >= 1 && state.records.at(second_label).is_ready();
        mid_ready_count += mid_ok ? 1 : 0;

        state = engine.step(state, 1, &rng, &record);
        const int second = state.records.at(second_label).outcome_index;
        const bool agree = (first == second);
        agree_count += agree ? 1 : 0;
        if (agree) {
            ++pair_counts[first];
        }

        if (event_log != nullptr) {
            for (const auto& [label, rec] : state.records) {
                record.final_records[label] = rec.outcome_index;
            }
            record.scalars["agreement"] = agree ? 1.0 : 0.0;
            event_log->push_back(std::move(record));
        }
    }
    report.verdicts.push_back(abs_claim(
        "two_observer.mid_ready",
        "between the interactions the first record is set, the second still ready", 1.0,
        static_cast<double>(mid_ready_count) / static_cast<double>(events), 0.0));
    report.verdicts.push_back(abs_claim(
        "two_observer.agreement", "both records agree in every single event", 1.0,
        static_cast<double>(agree_count) / static_cast<double>(events), 0.0));
    for (int i = 1; i <= scenario.outcome_count(); ++i) {
        const double p = std::norm(scenario.amplitudes()[i - 1]);
        report.verdicts.push_back(abs_claim(
            bracket("two_observer.joint_freq", i),
            "agreeing pair frequency matches the Born weight (4 sigma)", p,
            static_cast<double>(pair_counts[i]) / static_cast<double>(events),
            binomial_band(p, events)));
    }
    report.summaries.push_back(
        {"agreement_rate", static_cast<double>(agree_count) / static_cast<double>(events), 0.0});
    report.summaries.push_back({"witness_mid", witness_mid, 0.0});
    report.summaries.push_back({"joint_offdiag_max", offdiag, 0.0});
    return report;
}

ExperimentReport run_breuer_check(const MeasurementScenario& scenario, std::int64_t events,
                                  std::uint64_t master_seed,
                                  std::vector<EventRecord>* event_log) {
    require_positive_events(events);
    require_single_observer(scenario, "restricted-state check");
    const std::string& label = scenario.observers()[0].label;
    require_schedule(scenario, {{ScheduleStep::Kind::kInteract, label}},
                     "restricted-state check");
    int nonzero = 0;
    for (const Complex& a : scenario.amplitudes()) {
        nonzero += std::norm(a) > 0.0 ? 1 : 0;
    }
    require(nonzero >= 2, ErrorCode::kUnsupportedScenario,
            "restricted-state check needs at least two nonzero amplitudes");

    DualEngine engine(scenario);
    const Operator& coupling = engine.step_propagator(0);
    const DynamicalComponent pure_final =
        apply_unitary(DynamicalComponent(build_initial_pure(scenario)), coupling);
    const DynamicalComponent mixed_final =
        apply_unitary(DynamicalComponent(build_initial_mixed(scenario)), coupling);
    const DensityMatrix restricted_pure =
        engine.restricted_state_statistical(pure_final, label);
    const DensityMatrix restricted_mixed =
        engine.restricted_state_statistical(mixed_final, label);
    const double statistical_distance = trace_distance(restricted_pure, restricted_mixed);
    const DensityMatrix& restricted_ensemble =
        scenario.input_kind() == InputKind::kPure ? restricted_pure : restricted_mixed;

    double max_dev = 0.0;
    double distance_sum = 0.0;
    std::int64_t differs_count = 0;
    for (std::int64_t n = 0; n < events; ++n) {
        EventRecord record;
        DualState state = engine.run_event(master_seed, static_cast<std::uint64_t>(n), &record);
        const int l = state.records.at(label).outcome_index;
        const DensityMatrix event_state = engine.restricted_state_event(state, label);
        const double distance = trace_distance(event_state, restricted_ensemble);
        const double expected = 1.0 - std::norm(scenario.amplitudes()[l - 1]);
        max_dev = std::max(max_dev, std::abs(distance - expected));
        distance_sum += distance;
        differs_count += distance > kEventDiffersFloor ? 1 : 0;
        if (event_log != nullptr) {
            record.scalars["restricted_distance"] = distance;
            event_log->push_back(std::move(record));
        }
    }

    ExperimentReport report = base_report("breuer", scenario, events, master_seed);
    report.verdicts.push_back(abs_claim(
        "breuer.statistical_indistinguishable",
        "observer's reduced pointer state is input-purity independent", 0.0,
        statistical_distance, kStatisticalDistanceTol));
    report.verdicts.push_back(abs_claim(
        "breuer.event_distance",
        "per-event distance between recorded and ensemble pointer state is 1 - |a_l|^2", 0.0,
        max_dev, kEventDistanceTol));
    report.verdicts.push_back(abs_claim(
        "breuer.event_differs",
        "every single event deviates from the ensemble pointer state", 1.0,
        static_cast<double>(differs_count) / static_cast<double>(events), 0.0));
    report.summaries.push_back({"statistical_distance", statistical_distance, 0.0});
    report.summaries.push_back(
        {"mean_event_distance", distance_sum / static_cast<double>(events), 0.0});
    return report;
}

const std::vector<std::pair<std::string, ExperimentFn>>& experiment_registry() {
    static const std::vector<std::pair<std::string, ExperimentFn>> registry = {
        {"collapse",
         [](const MeasurementScenario& s, std::int64_t n, std::uint64_t seed,
            std::vector<EventRecord>* log) { return run_collapse_statistics(s, n, seed, log); }},
        {"interference",
         [](const MeasurementScenario& s, std::int64_t, std::uint64_t,
            std::vector<EventRecord>*) { return run_interference_test(s); }},
        {"undoing",
         [](const MeasurementScenario& s, std::int64_t n, std::uint64_t seed,
            std::vector<EventRecord>* log) { return run_undoing(s, n, seed, log); }},
        {"two-observer",
         [](const MeasurementScenario& s, std::int64_t n, std::uint64_t seed,
            std::vector<EventRecord>* log) { return run_two_observer(s, n, seed, log); }},
        {"breuer",
         [](const MeasurementScenario& s, std::int64_t n, std::uint64_t seed,
            std::vector<EventRecord>* log) { return run_breuer_check(s, n, seed, log); }},
    };
    return registry;
}

const ExperimentFn& find_experiment(const std::string& name) {
    for (const auto& [key, fn] : experiment_registry()) {
        if (key == name) {
            return fn;
        }
    }
    std::string known;
    for (const auto& [key, fn] : experiment_registry()) {
        known += (known.empty() ? "" : ", ") + key;
    }
    throw Error(ErrorCode::kArgument,
                "unknown experiment '" + name + "' (known: " + known + ")");
}

}  // namespace dualsim
