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

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "dualsim/layout.hpp"
#include "dualsim/state.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

// Whether the measured system starts as a superposition vector or as the
// corresponding incoherent mixture with the same weights.
enum class InputKind {
    kPure,
    kMixed,
};

// Whether measurement couplings enter as finished unitaries or as hermitian
// interaction generators integrated over the step window.
enum class InteractionMode {
    kUnitary,
    kHamiltonian,
};

struct ObserverSpec {
    std::string label;
    // Pointer reading q_j associated with outcome j (one per system outcome;
    // the ready level always reads 0).
    std::vector<double> pointer_eigenvalues;

    bool operator==(const ObserverSpec&) const = default;
};

struct ScheduleStep {
    enum class Kind {
        kInteract,
        kReverse,
        kFree,
    };

    Kind kind = Kind::kFree;
    std::string observer;  // empty for free evolution
    double t_start = 0.0;
    double t_end = 0.0;

    double duration() const {
        return t_end - t_start;
    }

    bool operator==(const ScheduleStep&) const = default;
};

const char* step_kind_name(ScheduleStep::Kind kind);

// Time-ordered, non-overlapping list of schedule steps. Interaction windows
// must have positive duration; a reversal may only follow an interaction of
// the same observer.
class InteractionSchedule {
  public:
    explicit InteractionSchedule(std::vector<ScheduleStep> steps);

    const std::vector<ScheduleStep>& steps() const {
        return steps_;
    }
    int step_count() const {
        return static_cast<int>(steps_.size());
    }
    const ScheduleStep& step(int index) const;

    bool operator==(const InteractionSchedule&) const = default;

  private:
    std::vector<ScheduleStep> steps_;
};

// Optional free (self) dynamics: diagonal level energies plus one real
// coupling between the two lowest system levels. Pointer level energies act
// identically on every replicated pointer cell, so records stay conserved.
struct FreeHamiltonianSpec {
    std::vector<double> s_energies;        // empty means all zero
    double s_coupling = 0.0;
    std::vector<double> pointer_energies;  // empty means all zero

    bool operator==(const FreeHamiltonianSpec&) const = default;
};

// Raw scenario fields as read from a file or assembled in code; validated and
// frozen by MeasurementScenario.
struct ScenarioDefinition {
    std::string name;
    std::vector<Complex> amplitudes;
    InputKind input_kind = InputKind::kPure;
    std::vector<ObserverSpec> observers;
    int pointer_df_count = 1;
    std::vector<ScheduleStep> schedule;
    std::optional<Eigen::MatrixXcd> s_final_map;
    std::optional<FreeHamiltonianSpec> free_hamiltonian;
    InteractionMode interaction_mode = InteractionMode::kUnitary;
    int dimension_cap = kDefaultDimensionCap;
};

bool definitions_equal(const ScenarioDefinition& a, const ScenarioDefinition& b);

// Validated measurement scenario.
//
// The composite layout is the system factor "S" followed by each observer's
// pointer cells in declaration order. A pointer carries one level per system
// outcome plus a distinguished ready level at index 0, so outcome j of the
// system maps to pointer level j and ready is level 0. With pointer_df_count
// = N each observer contributes N identical cells (labels "O#1".."O#N"); a
// record then corresponds to every cell agreeing on one level.
class MeasurementScenario {
  public:
    static constexpr const char* kSystemLabel = "S";

    explicit MeasurementScenario(ScenarioDefinition definition);

    const ScenarioDefinition& definition() const {
        return definition_;
    }
    const std::string& name() const {
        return definition_.name;
    }

    // Number of system outcomes (= system dimension).
    int outcome_count() const {
        return static_cast<int>(definition_.amplitudes.size());
    }
    int system_dimension() const {
        return outcome_count();
    }
    // Pointer cell dimension: one level per outcome plus the ready level.
    int pointer_dimension() const {
        return outcome_count() + 1;
    }
    int pointer_df_count() const {
        return definition_.pointer_df_count;
    }

    // Normalized amplitude profile a_i.
    const std::vector<Complex>& amplitudes() const {
        return definition_.amplitudes;
    }
    InputKind input_kind() const {
        return definition_.input_kind;
    }

    const std::vector<ObserverSpec>& observers() const {
        return definition_.observers;
    }
    int observer_count() const {
        return static_cast<int>(definition_.observers.size());
    }
    const ObserverSpec& observer(const std::string& label) const;
    int observer_index(const std::string& label) const;

    // Layout factor labels of one observer's pointer cells.
    std::vector<std::string> observer_cell_labels(const std::string& label) const;

    const SubsystemLayout& layout() const {
        return layout_;
    }
    const InteractionSchedule& schedule() const {
        return schedule_;
    }
    InteractionMode interaction_mode() const {
        return definition_.interaction_mode;
    }
    const std::optional<Eigen::MatrixXcd>& s_final_map() const {
        return definition_.s_final_map;
    }
    const std::optional<FreeHamiltonianSpec>& free_hamiltonian() const {
        return definition_.free_hamiltonian;
    }
    int dimension_cap() const {
        return definition_.dimension_cap;
    }

    // FNV-1a hash of a canonical dump of every definition field, printed as
    // 16 hex digits. Identifies the scenario in reports and event logs.
    std::string digest() const;

    bool operator==(const MeasurementScenario& other) const {
        return definitions_equal(definition_, other.definition_);
    }

  private:
    ScenarioDefinition definition_;
    InteractionSchedule schedule_;
    SubsystemLayout layout_;
};

}  // namespace dualsim
