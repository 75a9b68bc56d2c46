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

#include "dualsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <limits>
#include <set>

#include "dualsim/error.hpp"

namespace dualsim {

namespace {

// Two schedule windows overlap when one starts strictly inside the other.
// Zero-length free steps sitting on a boundary are fine.
constexpr double kTimeSlack = 1e-12;

bool matrices_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return (a.array() == b.array()).all();
}

}  // namespace

const char* step_kind_name(ScheduleStep::Kind kind) {
    switch (kind) {
        case ScheduleStep::Kind::kInteract:
            return "interact";
        case ScheduleStep::Kind::kReverse:
            return "reverse";
        case ScheduleStep::Kind::kFree:
            return "free";
    }
    return "unknown";
}

InteractionSchedule::InteractionSchedule(std::vector<ScheduleStep> steps)
    : steps_(std::move(steps)) {
    double previous_end = -std::numeric_limits<double>::infinity();
    std::set<std::string> interacted;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const ScheduleStep& step = steps_[i];
        const std::string where = "schedule step " + std::to_string(i);
        require(std::isfinite(step.t_start) && std::isfinite(step.t_end), ErrorCode::kSchedule,
                where + ": non-finite time");
        require(step.t_end >= step.t_start, ErrorCode::kSchedule,
                where + ": window ends before it starts");
        if (step.kind == ScheduleStep::Kind::kFree) {
            require(step.observer.empty(), ErrorCode::kSchedule,
                    where + ": free evolution must not name an observer");
        } else {
            require(!step.observer.empty(), ErrorCode::kSchedule,
                    where + ": " + step_kind_name(step.kind) + " needs an observer");
        }
        if (step.kind == ScheduleStep::Kind::kInteract) {
            require(step.t_end > step.t_start, ErrorCode::kSchedule,
                    where + ": interaction window must have positive duration");
            interacted.insert(step.observer);
        }
        if (step.kind == ScheduleStep::Kind::kReverse) {
            require(interacted.count(step.observer) > 0, ErrorCode::kSchedule,
                    where + ": reversal of observer '" + step.observer +
                        "' has no prior interaction");
        }
        require(step.t_start >= previous_end - kTimeSlack, ErrorCode::kSchedule,
                where + ": window overlaps the previous step");
        previous_end = std::max(previous_end, step.t_end);
    }
}

const ScheduleStep& InteractionSchedule::step(int index) const {
    require(index >= 0 && index < step_count(), ErrorCode::kArgument,
            "schedule step index out of range");
    return steps_[index];
}

bool definitions_equal(const ScenarioDefinition& a, const ScenarioDefinition& b) {
    if (a.name != b.name || a.amplitudes != b.amplitudes || a.input_kind != b.input_kind ||
        a.observers != b.observers || a.pointer_df_count != b.pointer_df_count ||
        a.schedule != b.schedule || a.free_hamiltonian != b.free_hamiltonian ||
        a.interaction_mode != b.interaction_mode || a.dimension_cap != b.dimension_cap) {
        return false;
    }
    if (a.s_final_map.has_value() != b.s_final_map.has_value()) {
        return false;
    }
    if (a.s_final_map && !matrices_equal(*a.s_final_map, *b.s_final_map)) {
        return false;
    }
    return true;
}

namespace {

SubsystemLayout build_layout(const ScenarioDefinition& def) {
    std::vector<SubsystemLayout::Factor> factors;
    const int pointer_dim = static_cast<int>(def.amplitudes.size()) + 1;
    factors.push_back({MeasurementScenario::kSystemLabel,
                       static_cast<int>(def.amplitudes.size())});
    for (const ObserverSpec& obs : def.observers) {
        if (def.pointer_df_count == 1) {
            factors.push_back({obs.label, pointer_dim});
        } else {
            for (int c = 1; c <= def.pointer_df_count; ++c) {
                factors.push_back({obs.label + "#" + std::to_string(c), pointer_dim});
            }
        }
    }
    return SubsystemLayout(std::move(factors));
}

}  // namespace

MeasurementScenario::MeasurementScenario(ScenarioDefinition definition)
    : definition_(std::move(definition)),
      schedule_(definition_.schedule),
      layout_({{kSystemLabel, 2}}) /* replaced below, after validation */ {
    require(definition_.amplitudes.size() >= 2, ErrorCode::kSchema,
            "scenario needs at least two system outcomes");
    double norm2 = 0.0;
    for (const Complex& a : definition_.amplitudes) {
        require(std::isfinite(a.real()) && std::isfinite(a.imag()), ErrorCode::kSchema,
                "non-finite amplitude");
        norm2 += std::norm(a);
    }
    require(std::abs(std::sqrt(norm2) - 1.0) <= kInputNormTolerance, ErrorCode::kNormalization,
            "amplitude profile has norm " + std::to_string(std::sqrt(norm2)) +
                "; must be 1 within " + std::to_string(kInputNormTolerance));
    // Renormalize, but only if actually off; keeping already-normalized
    // amplitudes bit-exact lets serialized scenarios round-trip unchanged.
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
        const double scale = 1.0 / std::sqrt(norm2);
        for (Complex& a : definition_.amplitudes) {
            a *= scale;
        }
    }

    require(!definition_.observers.empty(), ErrorCode::kSchema,
            "scenario needs at least one observer");
    std::set<std::string> labels;
    for (const ObserverSpec& obs : definition_.observers) {
        require(!obs.label.empty(), ErrorCode::kSchema, "observer label must be non-empty");
        require(obs.label != kSystemLabel, ErrorCode::kSchema,
                "observer label 'S' is reserved for the system");
        require(obs.label.find('#') == std::string::npos, ErrorCode::kSchema,
                "observer label '" + obs.label + "' must not contain '#'");
        require(labels.insert(obs.label).second, ErrorCode::kSchema,
                "duplicate observer label '" + obs.label + "'");
        require(obs.pointer_eigenvalues.size() == definition_.amplitudes.size(),
                ErrorCode::kSchema,
                "observer '" + obs.label + "' needs one pointer eigenvalue per outcome");
        for (double q : obs.pointer_eigenvalues) {
            require(std::isfinite(q), ErrorCode::kSchema, "non-finite pointer eigenvalue");
        }
    }

    require(definition_.pointer_df_count >= 1, ErrorCode::kSchema,
            "pointer_df_count must be >= 1");
    require(definition_.dimension_cap >= 2, ErrorCode::kSchema, "dimension_cap must be >= 2");

    // Capacity check before the layout allocates anything: dims multiply as
    // d_S * pointer_dim^(observers * cells).
    {
        long long total = static_cast<long long>(definition_.amplitudes.size());
        const long long pointer_dim = static_cast<long long>(pointer_dimension());
        const long long cells =
            static_cast<long long>(definition_.observers.size()) * definition_.pointer_df_count;
        for (long long c = 0; c < cells; ++c) {
            total *= pointer_dim;
            require(total <= definition_.dimension_cap, ErrorCode::kCapacity,
                    "composite dimension exceeds the cap of " +
                        std::to_string(definition_.dimension_cap));
        }
    }

    for (const ScheduleStep& step : definition_.schedule) {
        if (step.kind != ScheduleStep::Kind::kFree) {
            require(labels.count(step.observer) > 0, ErrorCode::kSchedule,
                    "schedule references unknown observer '" + step.observer + "'");
        }
    }

    if (definition_.s_final_map) {
        const Eigen::MatrixXcd& v = *definition_.s_final_map;
        const int d = static_cast<int>(definition_.amplitudes.size());
        require(v.rows() == d && v.cols() == d, ErrorCode::kSchema,
                "s_final_map must be square with the system dimension");
        double defect =
            (v * v.adjoint() - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
        require(defect <= kNormTolerance, ErrorCode::kSchema, "s_final_map must be unitary");
        require(definition_.interaction_mode == InteractionMode::kUnitary,
                ErrorCode::kUnsupportedScenario,
                "s_final_map is not available in hamiltonian interaction mode");
    }

    if (definition_.free_hamiltonian) {
        const FreeHamiltonianSpec& h = *definition_.free_hamiltonian;
        require(h.s_energies.empty() ||
                    h.s_energies.size() == definition_.amplitudes.size(),
                ErrorCode::kSchema, "free_hamiltonian.s_energies must list one energy per outcome");
        require(h.pointer_energies.empty() ||
                    static_cast<int>(h.pointer_energies.size()) == pointer_dimension(),
                ErrorCode::kSchema,
                "free_hamiltonian.pointer_energies must list one energy per pointer level");
        require(std::isfinite(h.s_coupling), ErrorCode::kSchema,
                "free_hamiltonian.s_coupling must be finite");
        for (double e : h.s_energies) {
            require(std::isfinite(e), ErrorCode::kSchema, "non-finite system energy");
        }
        for (double e : h.pointer_energies) {
            require(std::isfinite(e), ErrorCode::kSchema, "non-finite pointer energy");
        }
    }

    schedule_ = InteractionSchedule(definition_.schedule);
    layout_ = build_layout(definition_);
}

const ObserverSpec& MeasurementScenario::observer(const std::string& label) const {
    return definition_.observers[observer_index(label)];
}

int MeasurementScenario::observer_index(const std::string& label) const {
    for (int i = 0; i < observer_count(); ++i) {
        if (definition_.observers[i].label == label) {
            return i;
        }
    }
    throw Error(ErrorCode::kArgument, "no observer labeled '" + label + "'");
}

std::vector<std::string> MeasurementScenario::observer_cell_labels(
    const std::string& label) const {
    observer_index(label);  // validate
    if (definition_.pointer_df_count == 1) {
        return {label};
    }
    std::vector<std::string> cells;
    for (int c = 1; c <= definition_.pointer_df_count; ++c) {
        cells.push_back(label + "#" + std::to_string(c));
    }
    return cells;
}

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;  // FNV-1a prime
    }
}

void hash_text(std::uint64_t& h, const std::string& text) {
    hash_bytes(h, text.data(), text.size());
    hash_bytes(h, "|", 1);
}

void hash_double(std::uint64_t& h, double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    hash_text(h, buffer);
}

}  // namespace

std::string MeasurementScenario::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
    const ScenarioDefinition& d = definition_;
    hash_text(h, d.name);
    for (const Complex& a : d.amplitudes) {
        hash_double(h, a.real());
        hash_double(h, a.imag());
    }
    hash_text(h, d.input_kind == InputKind::kPure ? "pure" : "mixed");
    for (const ObserverSpec& obs : d.observers) {
        hash_text(h, obs.label);
        for (double q : obs.pointer_eigenvalues) {
            hash_double(h, q);
        }
    }
    hash_double(h, d.pointer_df_count);
    for (const ScheduleStep& step : d.schedule) {
        hash_text(h, step_kind_name(step.kind));
        hash_text(h, step.observer);
        hash_double(h, step.t_start);
        hash_double(h, step.t_end);
    }
    if (d.s_final_map) {
        hash_text(h, "s_final_map");
        for (int r = 0; r < d.s_final_map->rows(); ++r) {
            for (int c = 0; c < d.s_final_map->cols(); ++c) {
                hash_double(h, (*d.s_final_map)(r, c).real());
                hash_double(h, (*d.s_final_map)(r, c).imag());
            }
        }
    }
    if (d.free_hamiltonian) {
        hash_text(h, "free_hamiltonian");
        for (double e : d.free_hamiltonian->s_energies) {
            hash_double(h, e);
        }
        hash_double(h, d.free_hamiltonian->s_coupling);
        for (double e : d.free_hamiltonian->pointer_energies) {
            hash_double(h, e);
        }
    }
    hash_text(h, d.interaction_mode == InteractionMode::kUnitary ? "unitary" : "hamiltonian");
    hash_double(h, d.dimension_cap);

    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

}  // namespace dualsim
