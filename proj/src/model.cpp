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

#include "dualsim/model.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "dualsim/algebra.hpp"
#include "dualsim/error.hpp"

namespace dualsim {

namespace {

std::vector<int> cell_factor_indices(const MeasurementScenario& scenario,
                                     const std::string& observer) {
    std::vector<int> factors;
    for (const std::string& label : scenario.observer_cell_labels(observer)) {
        factors.push_back(scenario.layout().factor_index(label));
    }
    return factors;
}

}  // namespace

StateVector build_initial_pure(const MeasurementScenario& scenario) {
    const SubsystemLayout& layout = scenario.layout();
    const int s_stride = layout.stride(layout.factor_index(MeasurementScenario::kSystemLabel));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(layout.total_dimension());
    for (int i = 0; i < scenario.outcome_count(); ++i) {
        // System outcome i with every pointer cell in the ready level.
        v[i * s_stride] = scenario.amplitudes()[i];
    }
    return StateVector(layout, std::move(v), Unchecked{});
}

DensityMatrix build_initial_mixed(const MeasurementScenario& scenario) {
    const SubsystemLayout& layout = scenario.layout();
    const int s_stride = layout.stride(layout.factor_index(MeasurementScenario::kSystemLabel));
    Eigen::MatrixXcd rho =
        Eigen::MatrixXcd::Zero(layout.total_dimension(), layout.total_dimension());
    for (int i = 0; i < scenario.outcome_count(); ++i) {
        const int flat = i * s_stride;
        rho(flat, flat) = std::norm(scenario.amplitudes()[i]);
    }
    return DensityMatrix(layout, std::move(rho), Unchecked{});
}

DynamicalComponent build_initial_state(const MeasurementScenario& scenario) {
    if (scenario.input_kind() == InputKind::kPure) {
        return build_initial_pure(scenario);
    }
    return build_initial_mixed(scenario);
}

Operator build_premeasurement_unitary(const MeasurementScenario& scenario,
                                      const std::string& observer) {
    const SubsystemLayout& layout = scenario.layout();
    const int total = layout.total_dimension();
    const int pointer_dim = scenario.pointer_dimension();
    const int s_factor = layout.factor_index(MeasurementScenario::kSystemLabel);
    const std::vector<int> cells = cell_factor_indices(scenario, observer);

    // Permutation: conditioned on system outcome k, advance every cell by
    // k + 1 levels, which maps ready (level 0) to the outcome level k + 1.
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(total, total);
    for (int col = 0; col < total; ++col) {
        const int k = layout.digit(col, s_factor);
        int row = col;
        for (int cell : cells) {
            row = layout.with_digit(row, cell, (layout.digit(row, cell) + k + 1) % pointer_dim);
        }
        u(row, col) = Complex(1.0, 0.0);
    }
    if (scenario.s_final_map()) {
        Operator v = embed(layout, {MeasurementScenario::kSystemLabel}, *scenario.s_final_map(),
                           OperatorKind::kUnitary);
        u = v.entries() * u;
    }
    return Operator(layout, std::move(u), OperatorKind::kUnitary, Unchecked{});
}

Operator build_reversal_unitary(const Operator& premeasurement) {
    require(premeasurement.kind() == OperatorKind::kUnitary, ErrorCode::kArgument,
            "build_reversal_unitary: coupling must be tagged unitary");
    return premeasurement.adjoint();
}

Operator build_interference_observable(const MeasurementScenario& scenario,
                                       const std::string& observer) {
    require(scenario.outcome_count() == 2, ErrorCode::kUnsupportedScenario,
            "interference observable is defined for binary systems only");
    const int pointer_dim = scenario.pointer_dimension();
    const int cell_count = scenario.pointer_df_count();

    std::vector<std::string> on = {MeasurementScenario::kSystemLabel};
    for (const std::string& label : scenario.observer_cell_labels(observer)) {
        on.push_back(label);
    }

    // Row-major index into the (S, cells...) block with every cell at the
    // same level.
    auto block_index = [&](int s, int level) {
        int index = s;
        for (int c = 0; c < cell_count; ++c) {
            index = index * pointer_dim + level;
        }
        return index;
    };
    int block_dim = 2;
    for (int c = 0; c < cell_count; ++c) {
        block_dim *= pointer_dim;
    }
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(block_dim, block_dim);
    block(block_index(0, 1), block_index(1, 2)) = Complex(1.0, 0.0);
    block(block_index(1, 2), block_index(0, 1)) = Complex(1.0, 0.0);
    return embed(scenario.layout(), on, block, OperatorKind::kHermitian);
}

Operator build_interference_observable(const MeasurementScenario& scenario) {
    return build_interference_observable(scenario, scenario.observers().front().label);
}

std::pair<Operator, Operator> build_two_observer_chain(const MeasurementScenario& scenario) {
    require(scenario.observer_count() == 2, ErrorCode::kUnsupportedScenario,
            "two-observer chain needs exactly two observers");
    return {build_premeasurement_unitary(scenario, scenario.observers()[0].label),
            build_premeasurement_unitary(scenario, scenario.observers()[1].label)};
}

MeasurementScenario expand_pointer_dfs(const MeasurementScenario& scenario, int df_count) {
    require(df_count >= 1, ErrorCode::kArgument, "df_count must be >= 1");
    ScenarioDefinition definition = scenario.definition();
    definition.pointer_df_count = df_count;
    return MeasurementScenario(std::move(definition));
}

Operator pointer_outcome_projector(const MeasurementScenario& scenario,
                                   const std::string& observer, int outcome) {
    require(outcome >= 0 && outcome <= scenario.outcome_count(), ErrorCode::kArgument,
            "outcome index out of range (0 = ready)");
    const SubsystemLayout& layout = scenario.layout();
    const std::vector<int> cells = cell_factor_indices(scenario, observer);
    Eigen::MatrixXcd p =
        Eigen::MatrixXcd::Zero(layout.total_dimension(), layout.total_dimension());
    for (int flat = 0; flat < layout.total_dimension(); ++flat) {
        bool match = true;
        for (int cell : cells) {
            match &= (layout.digit(flat, cell) == outcome);
        }
        if (match) {
            p(flat, flat) = Complex(1.0, 0.0);
        }
    }
    return Operator(layout, std::move(p), OperatorKind::kProjector, Unchecked{});
}

Operator pointer_observable(const MeasurementScenario& scenario, const std::string& observer) {
    const SubsystemLayout& layout = scenario.layout();
    const std::vector<int> cells = cell_factor_indices(scenario, observer);
    const std::vector<double>& q = scenario.observer(observer).pointer_eigenvalues;
    Eigen::MatrixXcd m =
        Eigen::MatrixXcd::Zero(layout.total_dimension(), layout.total_dimension());
    for (int flat = 0; flat < layout.total_dimension(); ++flat) {
        const int level = layout.digit(flat, cells.front());
        bool agree = true;
        for (int cell : cells) {
            agree &= (layout.digit(flat, cell) == level);
        }
        if (agree && level > 0) {
            m(flat, flat) = q[level - 1];
        }
    }
    return Operator(layout, std::move(m), OperatorKind::kHermitian, Unchecked{});
}

Operator free_hamiltonian_operator(const MeasurementScenario& scenario) {
    const SubsystemLayout& layout = scenario.layout();
    const int total = layout.total_dimension();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(total, total);
    if (!scenario.free_hamiltonian()) {
        return Operator(layout, std::move(h), OperatorKind::kHermitian, Unchecked{});
    }
    const FreeHamiltonianSpec& spec = *scenario.free_hamiltonian();
    const int s_factor = layout.factor_index(MeasurementScenario::kSystemLabel);

    for (int flat = 0; flat < total; ++flat) {
        double energy = 0.0;
        if (!spec.s_energies.empty()) {
            energy += spec.s_energies[layout.digit(flat, s_factor)];
        }
        if (!spec.pointer_energies.empty()) {
            // Pointer self-energies are level-diagonal and identical for
            // every cell, so they dephase branches without mixing them.
            for (int f = 0; f < layout.factor_count(); ++f) {
                if (f != s_factor) {
                    energy += spec.pointer_energies[layout.digit(flat, f)];
                }
            }
        }
        h(flat, flat) = energy;
    }
    if (spec.s_coupling != 0.0) {
        for (int flat = 0; flat < total; ++flat) {
            if (layout.digit(flat, s_factor) == 0) {
                const int partner = layout.with_digit(flat, s_factor, 1);
                h(flat, partner) += spec.s_coupling;
                h(partner, flat) += spec.s_coupling;
            }
        }
    }
    return Operator(layout, std::move(h), OperatorKind::kHermitian, Unchecked{});
}

Operator interaction_hamiltonian(const MeasurementScenario& scenario,
                                 const std::string& observer, double duration) {
    require(duration > 0.0 && std::isfinite(duration), ErrorCode::kArgument,
            "interaction duration must be positive");
    require(!scenario.s_final_map(), ErrorCode::kUnsupportedScenario,
            "interaction generator is not available with an s_final_map");
    const SubsystemLayout& layout = scenario.layout();
    const int total = layout.total_dimension();
    const int d = scenario.pointer_dimension();
    const int s_factor = layout.factor_index(MeasurementScenario::kSystemLabel);
    const std::vector<int> cells = cell_factor_indices(scenario, observer);

    // Hermitian logarithm of the r-step cyclic shift on one pointer cell,
    // from its Fourier eigenbasis: shift^r = sum_k e^{-2 pi i k r / d}
    // |v_k><v_k| with v_k[m] = e^{2 pi i m k / d} / sqrt(d). Eigenphases are
    // reduced to (-pi, pi] so the generator has minimal norm.
    auto shift_generator = [&](int r) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
        for (int k = 0; k < d; ++k) {
            double theta = 2.0 * std::numbers::pi * ((k * r) % d) / d;
            if (theta > std::numbers::pi) {
                theta -= 2.0 * std::numbers::pi;
            }
            Eigen::VectorXcd v(d);
            for (int m = 0; m < d; ++m) {
                v[m] = std::exp(Complex(0.0, 2.0 * std::numbers::pi * m * k / d)) /
                       std::sqrt(static_cast<double>(d));
            }
            g += theta * (v * v.adjoint());
        }
        return g;
    };
    std::vector<Eigen::MatrixXcd> generators;
    for (int k = 0; k < scenario.outcome_count(); ++k) {
        generators.push_back(shift_generator(k + 1));
    }

    // Sum of per-cell generators, conditioned on the system outcome. The
    // cell terms commute, so the propagator factorizes into the per-cell
    // shifts that make up the premeasurement coupling.
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(total, total);
    for (int cell : cells) {
        for (int col = 0; col < total; ++col) {
            const int k = layout.digit(col, s_factor);
            const Eigen::MatrixXcd& g = generators[k];
            const int level_col = layout.digit(col, cell);
            for (int level_row = 0; level_row < d; ++level_row) {
                const Complex value = g(level_row, level_col);
                if (value != Complex(0.0, 0.0)) {
                    h(layout.with_digit(col, cell, level_row), col) += value / duration;
                }
            }
        }
    }
    return Operator(layout, std::move(h), OperatorKind::kHermitian);
}

}  // namespace dualsim
