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
#include <map>
#include <string>
#include <vector>

#include "dualsim/model.hpp"
#include "dualsim/operators.hpp"
#include "dualsim/rng.hpp"
#include "dualsim/scenario.hpp"
#include "dualsim/state.hpp"

namespace dualsim {

// One observer's informational component: the record index it currently
// holds. 0 is the ready level, outcome j >= 1 matches system outcome j.
struct PointerRecord {
    std::string observer_label;
    int outcome_index = 0;

    bool is_ready() const {
        return outcome_index == 0;
    }

    bool operator==(const PointerRecord&) const = default;
};

// Dual description of a single measurement event: the unitarily evolving
// dynamical component plus one record per observer. Record updates never
// feed back into the dynamical component.
struct DualState {
    DynamicalComponent dynamical;
    std::map<std::string, PointerRecord> records;
};

// Probability weights over record values (index 0 = ready, then one weight
// per outcome). Non-negative, summing to 1 within kNormTolerance.
class OutcomeDistribution {
  public:
    explicit OutcomeDistribution(std::vector<double> weights);

    int size() const {
        return static_cast<int>(weights_.size());
    }
    double weight(int index) const;
    const std::vector<double>& weights() const {
        return weights_;
    }
    double total() const {
        return total_;
    }

  private:
    std::vector<double> weights_;
    double total_ = 0.0;
};

// Ensemble-level counterpart of DualState: instead of one sampled record per
// observer, the full record distribution each observer faces.
struct StatisticalDualState {
    DynamicalComponent dynamical;
    std::map<std::string, OutcomeDistribution> distributions;
};

// Everything sampled during one event, sufficient to replay or audit it.
struct EventRecord {
    std::uint64_t event_index = 0;
    std::uint64_t rng_seed = 0;  // derived per-event substream key
    struct StepOutcome {
        int step_index = 0;
        std::string observer_label;
        int outcome_index = 0;

        bool operator==(const StepOutcome&) const = default;
    };
    std::vector<StepOutcome> step_outcomes;
    std::map<std::string, int> final_records;
    std::map<std::string, double> scalars;
};

// Inverse-CDF draw from an outcome distribution. Zero-weight outcomes are
// unreachable; an all-zero distribution cannot be constructed in the first
// place (degenerate-distribution error).
int sample_outcome(const OutcomeDistribution& distribution, CounterRng& rng);

// |<target| u |initial>|^2.
double transition_probability(const Operator& u, const StateVector& initial,
                              const StateVector& target);

// Schedule executor for one scenario. All step propagators and record
// conservation flags are precomputed at construction, so per-event work is a
// handful of dense matrix-vector products plus the record draws.
class DualEngine {
  public:
    explicit DualEngine(MeasurementScenario scenario);

    const MeasurementScenario& scenario() const {
        return scenario_;
    }

    // Initial dual state: configured input profile, every record ready.
    DualState initial_state() const;

    // Record distribution one observer faces in a dynamical state: the
    // diagonal weight captured by each of its record projectors.
    OutcomeDistribution pointer_distribution(const DynamicalComponent& state,
                                             const std::string& observer) const;

    // Same, conditioned on the records the other observers already hold
    // (their record projectors are applied to the state first). For a single
    // observer this is exactly pointer_distribution.
    OutcomeDistribution conditional_pointer_distribution(
        const DynamicalComponent& state, const std::string& observer,
        const std::map<std::string, PointerRecord>& records) const;

    // Joint record distribution of two observers: mass on every record pair
    // (i, j), i.e. the expectation of the product of their record projectors.
    Eigen::MatrixXd joint_pointer_distribution(const DynamicalComponent& state,
                                               const std::string& observer_a,
                                               const std::string& observer_b) const;

    // True when the operator conserves the observer's records: every block
    // coupling two different levels of one of its cells has operator norm
    // below kBranchTolerance. Hermitian operators are treated as generators,
    // unitaries as propagators; either way a true verdict means the step
    // cannot move weight between record branches.
    bool identity_guard(const Operator& op, const std::string& observer) const;

    // Advance one schedule step: the dynamical component is mapped through
    // the step's propagator, then every observer whose records the step does
    // not conserve redraws its record (in declaration order, conditioned on
    // the records the others currently hold). With rng == nullptr no records
    // are touched: sampling off. The dynamical update is identical either
    // way, to the bit.
    DualState step(const DualState& state, int step_index, CounterRng* rng,
                   EventRecord* record = nullptr) const;

    // Runs every schedule step of one event on a fresh per-event substream.
    DualState run_event(std::uint64_t master_seed, std::uint64_t event_index,
                        EventRecord* record = nullptr) const;

    // Full schedule with sampling off (the deterministic ensemble picture).
    DynamicalComponent run_unsampled() const;

    // Ensemble view of a dynamical state: per-observer record distributions.
    StatisticalDualState statistical_state(const DynamicalComponent& state) const;

    // Reduced ensemble state of one observer's pointer: the partial trace
    // over everything else.
    DensityMatrix restricted_state_statistical(const DynamicalComponent& state,
                                               const std::string& observer) const;

    // Reduced pointer state a single event exhibits: the pure level
    // configuration matching the observer's current record.
    DensityMatrix restricted_state_event(const DualState& state,
                                         const std::string& observer) const;

    int step_count() const {
        return scenario_.schedule().step_count();
    }
    const Operator& step_propagator(int step_index) const;
    bool step_conserves(int step_index, const std::string& observer) const;

  private:
    MeasurementScenario scenario_;
    std::vector<Operator> propagators_;          // one per schedule step
    std::vector<std::vector<bool>> conserves_;   // [step][observer index]
    std::vector<std::vector<int>> record_of_flat_;  // [observer][flat] or -1
};

}  // namespace dualsim
