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

#include "dualsim/engine.hpp"

#include <cmath>

#include "dualsim/algebra.hpp"
#include "dualsim/error.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

namespace {

// A conditional total below this is numerically indistinguishable from
// conditioning on an impossible record combination.
constexpr double kDegenerateTotal = 1e-15;

}  // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
    require(!weights_.empty(), ErrorCode::kArgument, "outcome distribution is empty");
    double total = 0.0;
    for (double& w : weights_) {
        require(std::isfinite(w), ErrorCode::kArgument, "non-finite outcome weight");
        require(w >= -kNormTolerance, ErrorCode::kNormalization,
                "negative outcome weight " + std::to_string(w));
        if (w < 0.0) {
            w = 0.0;  // clip rounding dust
        }
        total += w;
    }
    require(total > kDegenerateTotal, ErrorCode::kDegenerateDistribution,
            "all outcome weights vanish; nothing to sample");
    require(std::abs(total - 1.0) <= kNormTolerance, ErrorCode::kNormalization,
            "outcome weights sum to " + std::to_string(total) + ", expected 1");
    total_ = total;
}

double OutcomeDistribution::weight(int index) const {
    require(index >= 0 && index < size(), ErrorCode::kArgument,
            "outcome index out of range");
    return weights_[index];
}

int sample_outcome(const OutcomeDistribution& distribution, CounterRng& rng) {
    // Scaling the dial by the actual total (within tolerance of 1) keeps the
    // last positive bin exactly reachable.
    const double dial = rng.next_double() * distribution.total();
    double cumulative = 0.0;
    int last_positive = -1;
    for (int j = 0; j < distribution.size(); ++j) {
        const double w = distribution.weights()[j];
        if (w <= 0.0) {
            continue;
        }
        cumulative += w;
        last_positive = j;
        if (dial < cumulative) {
            return j;
        }
    }
    // dial == total can only be lost to rounding in the partial sums.
    return last_positive;
}

double transition_probability(const Operator& u, const StateVector& initial,
                              const StateVector& target) {
    require(u.kind() == OperatorKind::kUnitary, ErrorCode::kArgument,
            "transition_probability: operator is not tagged unitary");
    require(initial.layout() == u.layout() && target.layout() == u.layout(),
            ErrorCode::kArgument, "transition_probability: layouts differ");
    return std::norm(target.amplitudes().dot(u.entries() * initial.amplitudes()));
}

DualEngine::DualEngine(MeasurementScenario scenario) : scenario_(std::move(scenario)) {
    const SubsystemLayout& layout = scenario_.layout();
    const int total = layout.total_dimension();

    // Record value each flat index belongs to, per observer: the common level
    // when all of the observer's cells agree, -1 otherwise.
    for (const ObserverSpec& obs : scenario_.observers()) {
        std::vector<int> cells;
        for (const std::string& label : scenario_.observer_cell_labels(obs.label)) {
            cells.push_back(layout.factor_index(label));
        }
        std::vector<int> record_of(total);
        for (int flat = 0; flat < total; ++flat) {
            int level = layout.digit(flat, cells.front());
            for (int cell : cells) {
                if (layout.digit(flat, cell) != level) {
                    level = -1;
                    break;
                }
            }
            record_of[flat] = level;
        }
        record_of_flat_.push_back(std::move(record_of));
    }

    // Step propagators and conservation flags. In hamiltonian mode the
    // couplings enter through their generators; reversal integrates the same
    // generator backwards.
    const Operator free_h = free_hamiltonian_operator(scenario_);
    const bool has_free_h = scenario_.free_hamiltonian().has_value();
    for (const ScheduleStep& step : scenario_.schedule().steps()) {
        switch (step.kind) {
            case ScheduleStep::Kind::kFree: {
                if (has_free_h) {
                    propagators_.push_back(propagator(free_h, step.duration()));
                } else {
                    propagators_.push_back(Operator::identity(layout));
                }
                break;
            }
            case ScheduleStep::Kind::kInteract: {
                if (scenario_.interaction_mode() == InteractionMode::kHamiltonian) {
                    Operator h = interaction_hamiltonian(scenario_, step.observer,
                                                         step.duration());
                    propagators_.push_back(propagator(h, step.duration()));
                } else {
                    propagators_.push_back(
                        build_premeasurement_unitary(scenario_, step.observer));
                }
                break;
            }
            case ScheduleStep::Kind::kReverse: {
                if (scenario_.interaction_mode() == InteractionMode::kHamiltonian) {
                    const double duration =
                        step.duration() > 0.0 ? step.duration() : 1.0;
                    Operator h = interaction_hamiltonian(scenario_, step.observer, duration);
                    propagators_.push_back(propagator(h, -duration));
                } else {
                    propagators_.push_back(build_reversal_unitary(
                        build_premeasurement_unitary(scenario_, step.observer)));
                }
                break;
            }
        }
    }
    for (std::size_t i = 0; i < propagators_.size(); ++i) {
        const ScheduleStep& step = scenario_.schedule().step(static_cast<int>(i));
        std::vector<bool> flags;
        for (const ObserverSpec& obs : scenario_.observers()) {
            // Judge free steps by their generator when one exists; the
            // propagator itself is equivalent but the generator is cheaper
            // to reason about and independent of the window length.
            if (step.kind == ScheduleStep::Kind::kFree) {
                flags.push_back(has_free_h ? identity_guard(free_h, obs.label) : true);
            } else {
                flags.push_back(identity_guard(propagators_[i], obs.label));
            }
        }
        conserves_.push_back(std::move(flags));
    }
}

DualState DualEngine::initial_state() const {
    DualState state{build_initial_state(scenario_), {}};
    for (const ObserverSpec& obs : scenario_.observers()) {
        state.records[obs.label] = PointerRecord{obs.label, 0};
    }
    return state;
}

OutcomeDistribution DualEngine::pointer_distribution(const DynamicalComponent& state,
                                                     const std::string& observer) const {
    require(layout_of(state) == scenario_.layout(), ErrorCode::kArgument,
            "pointer_distribution: state layout does not match the scenario");
    const std::vector<int>& record_of = record_of_flat_[scenario_.observer_index(observer)];
    std::vector<double> weights(scenario_.pointer_dimension(), 0.0);
    for (int flat = 0; flat < static_cast<int>(record_of.size()); ++flat) {
        if (record_of[flat] >= 0) {
            weights[record_of[flat]] += basis_weight(state, flat);
        }
    }
    return OutcomeDistribution(std::move(weights));
}

OutcomeDistribution DualEngine::conditional_pointer_distribution(
    const DynamicalComponent& state, const std::string& observer,
    const std::map<std::string, PointerRecord>& records) const {
    require(layout_of(state) == scenario_.layout(), ErrorCode::kArgument,
            "conditional_pointer_distribution: state layout does not match the scenario");
    const int self = scenario_.observer_index(observer);

    // Record projectors are diagonal, so conditioning is a masked sum: keep
    // the flats whose record pattern matches every other observer's record.
    std::vector<std::pair<const std::vector<int>*, int>> conditions;
    for (const auto& [label, record] : records) {
        const int other = scenario_.observer_index(label);
        if (other != self) {
            conditions.emplace_back(&record_of_flat_[other], record.outcome_index);
        }
    }
    if (conditions.empty()) {
        return pointer_distribution(state, observer);
    }

    const std::vector<int>& record_of = record_of_flat_[self];
    std::vector<double> weights(scenario_.pointer_dimension(), 0.0);
    double matched = 0.0;
    for (int flat = 0; flat < static_cast<int>(record_of.size()); ++flat) {
        bool match = true;
        for (const auto& [other_record_of, outcome] : conditions) {
            if ((*other_record_of)[flat] != outcome) {
                match = false;
                break;
            }
        }
        if (!match) {
            continue;
        }
        const double w = basis_weight(state, flat);
        matched += w;
        if (record_of[flat] >= 0) {
            weights[record_of[flat]] += w;
        }
    }
    require(matched > kDegenerateTotal, ErrorCode::kDegenerateDistribution,
            "conditioning on the current records leaves no probability mass");
    for (double& w : weights) {
        w /= matched;
    }
    return OutcomeDistribution(std::move(weights));
}

Eigen::MatrixXd DualEngine::joint_pointer_distribution(const DynamicalComponent& state,
                                                       const std::string& observer_a,
                                                       const std::string& observer_b) const {
    require(layout_of(state) == scenario_.layout(), ErrorCode::kArgument,
            "joint_pointer_distribution: state layout does not match the scenario");
    require(observer_a != observer_b, ErrorCode::kArgument,
            "joint_pointer_distribution: need two distinct observers");
    const std::vector<int>& record_a = record_of_flat_[scenario_.observer_index(observer_a)];
    const std::vector<int>& record_b = record_of_flat_[scenario_.observer_index(observer_b)];
    const int size = scenario_.pointer_dimension();
    Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(size, size);
    for (int flat = 0; flat < static_cast<int>(record_a.size()); ++flat) {
        if (record_a[flat] >= 0 && record_b[flat] >= 0) {
            joint(record_a[flat], record_b[flat]) += basis_weight(state, flat);
        }
    }
    return joint;
}

bool DualEngine::identity_guard(const Operator& op, const std::string& observer) const {
    require(op.layout() == scenario_.layout(), ErrorCode::kArgument,
            "identity_guard: operator layout does not match the scenario");
    const SubsystemLayout& layout = scenario_.layout();
    const Eigen::MatrixXcd& m = op.entries();
    const int d = scenario_.pointer_dimension();

    for (const std::string& cell_label : scenario_.observer_cell_labels(observer)) {
        const int cell = layout.factor_index(cell_label);
        const int block_dim = layout.total_dimension() / d;

        // Flat indices grouped by this cell's level.
        std::vector<std::vector<int>> level_flats(d);
        for (int flat = 0; flat < layout.total_dimension(); ++flat) {
            level_flats[layout.digit(flat, cell)].push_back(flat);
        }
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (i == j) {
                    continue;
                }
                Eigen::MatrixXcd block(block_dim, block_dim);
                double max_entry = 0.0;
                for (int r = 0; r < block_dim; ++r) {
                    for (int c = 0; c < block_dim; ++c) {
                        block(r, c) = m(level_flats[i][r], level_flats[j][c]);
                        max_entry = std::max(max_entry, std::abs(block(r, c)));
                    }
                }
                if (max_entry == 0.0) {
                    continue;
                }
                // Cheap bound first: ||B||_2 <= dim * max|entry|.
                if (max_entry * block_dim < kBranchTolerance) {
                    continue;
                }
                if (spectral_norm(block) >= kBranchTolerance) {
                    return false;
                }
            }
        }
    }
    return true;
}

DualState DualEngine::step(const DualState& state, int step_index, CounterRng* rng,
                           EventRecord* record) const {
    require(step_index >= 0 && step_index < step_count(), ErrorCode::kArgument,
            "schedule step index out of range");
    DualState next{apply_unitary(state.dynamical, propagators_[step_index]), state.records};
    if (rng == nullptr) {
        return next;
    }
    for (int o = 0; o < scenario_.observer_count(); ++o) {
        if (conserves_[step_index][o]) {
            continue;
        }
        const std::string& label = scenario_.observers()[o].label;
        OutcomeDistribution distribution =
            conditional_pointer_distribution(next.dynamical, label, next.records);
        const int outcome = sample_outcome(distribution, *rng);
        next.records[label] = PointerRecord{label, outcome};
        if (record != nullptr) {
            record->step_outcomes.push_back({step_index, label, outcome});
        }
    }
    return next;
}

DualState DualEngine::run_event(std::uint64_t master_seed, std::uint64_t event_index,
                                EventRecord* record) const {
    CounterRng rng(master_seed, event_index);
    if (record != nullptr) {
        record->event_index = event_index;
        record->rng_seed = rng.stream_key();
        record->step_outcomes.clear();
        record->final_records.clear();
        record->scalars.clear();
    }
    DualState state = initial_state();
    for (int i = 0; i < step_count(); ++i) {
        state = step(state, i, &rng, record);
    }
    if (record != nullptr) {
        for (const auto& [label, rec] : state.records) {
            record->final_records[label] = rec.outcome_index;
        }
    }
    return state;
}

DynamicalComponent DualEngine::run_unsampled() const {
    DualState state = initial_state();
    for (int i = 0; i < step_count(); ++i) {
        state = step(state, i, nullptr);
    }
    return state.dynamical;
}

StatisticalDualState DualEngine::statistical_state(const DynamicalComponent& state) const {
    StatisticalDualState out{state, {}};
    for (const ObserverSpec& obs : scenario_.observers()) {
        out.distributions.emplace(obs.label, pointer_distribution(state, obs.label));
    }
    return out;
}

DensityMatrix DualEngine::restricted_state_statistical(const DynamicalComponent& state,
                                                       const std::string& observer) const {
    require(layout_of(state) == scenario_.layout(), ErrorCode::kArgument,
            "restricted_state_statistical: state layout does not match the scenario");
    return partial_trace(as_density(state), scenario_.observer_cell_labels(observer));
}

DensityMatrix DualEngine::restricted_state_event(const DualState& state,
                                                 const std::string& observer) const {
    const auto it = state.records.find(observer);
    require(it != state.records.end(), ErrorCode::kArgument,
            "restricted_state_event: no record for observer '" + observer + "'");
    const int outcome = it->second.outcome_index;
    require(outcome >= 0 && outcome < scenario_.pointer_dimension(), ErrorCode::kArgument,
            "restricted_state_event: record outcome out of range");

    std::vector<SubsystemLayout::Factor> factors;
    for (const std::string& label : scenario_.observer_cell_labels(observer)) {
        factors.push_back({label, scenario_.pointer_dimension()});
    }
    SubsystemLayout cell_layout(std::move(factors));
    int flat = 0;
    for (int f = 0; f < cell_layout.factor_count(); ++f) {
        flat = cell_layout.with_digit(flat, f, outcome);
    }
    return DensityMatrix::pure(StateVector::basis_state(std::move(cell_layout), flat));
}

const Operator& DualEngine::step_propagator(int step_index) const {
    require(step_index >= 0 && step_index < step_count(), ErrorCode::kArgument,
            "schedule step index out of range");
    return propagators_[step_index];
}

bool DualEngine::step_conserves(int step_index, const std::string& observer) const {
    require(step_index >= 0 && step_index < step_count(), ErrorCode::kArgument,
            "schedule step index out of range");
    return conserves_[step_index][scenario_.observer_index(observer)];
}

}  // namespace dualsim
