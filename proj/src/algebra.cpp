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

#include "dualsim/algebra.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <set>

#include "dualsim/error.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

namespace {

void require_same_layout(const SubsystemLayout& a, const SubsystemLayout& b,
                         const char* context) {
    require(a == b, ErrorCode::kArgument,
            std::string(context) + ": operand layouts differ");
}

void require_hermitian_kind(const Operator& op, const char* context) {
    require(op.kind() == OperatorKind::kHermitian || op.kind() == OperatorKind::kProjector,
            ErrorCode::kArgument,
            std::string(context) + ": operator must be tagged hermitian or projector, got " +
                kind_name(op.kind()));
}

// Kind of a Kronecker product: preserved when both sides agree (all three
// checked kinds are closed under tensoring), otherwise demoted to general.
OperatorKind combined_kind(OperatorKind a, OperatorKind b) {
    if (a == b) {
        return a;
    }
    return OperatorKind::kGeneral;
}

}  // namespace

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    SubsystemLayout layout = SubsystemLayout::concat(a.layout(), b.layout());
    Eigen::VectorXcd v = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes());
    return StateVector(std::move(layout), std::move(v), Unchecked{});
}

Operator tensor_product(const Operator& a, const Operator& b) {
    SubsystemLayout layout = SubsystemLayout::concat(a.layout(), b.layout());
    Eigen::MatrixXcd m = Eigen::kroneckerProduct(a.entries(), b.entries());
    return Operator(std::move(layout), std::move(m), combined_kind(a.kind(), b.kind()),
                    Unchecked{});
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
    SubsystemLayout layout = SubsystemLayout::concat(a.layout(), b.layout());
    Eigen::MatrixXcd m = Eigen::kroneckerProduct(a.entries(), b.entries());
    return DensityMatrix(std::move(layout), std::move(m), Unchecked{});
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
    const SubsystemLayout& layout = rho.layout();
    require(!keep.empty(), ErrorCode::kArgument, "partial_trace: keep set is empty");
    std::set<std::string> keep_set(keep.begin(), keep.end());
    require(keep_set.size() == keep.size(), ErrorCode::kArgument,
            "partial_trace: duplicate label in keep set");
    for (const std::string& label : keep) {
        require(layout.has_factor(label), ErrorCode::kArgument,
                "partial_trace: no factor labeled '" + label + "'");
    }
    require(static_cast<int>(keep.size()) < layout.factor_count(), ErrorCode::kArgument,
            "partial_trace: keeping every factor leaves nothing to trace");

    // Kept factors stay in layout order regardless of the order given.
    std::vector<int> kept_factors;
    std::vector<int> traced_factors;
    std::vector<SubsystemLayout::Factor> kept_spec;
    for (int i = 0; i < layout.factor_count(); ++i) {
        if (keep_set.count(layout.factor(i).label)) {
            kept_factors.push_back(i);
            kept_spec.push_back(layout.factor(i));
        } else {
            traced_factors.push_back(i);
        }
    }

    // Flat-index offsets contributed by each kept / traced sub-index, so the
    // contraction below is a plain two-level loop.
    auto offsets_for = [&](const std::vector<int>& factors) {
        int count = 1;
        for (int f : factors) {
            count *= layout.factor(f).dimension;
        }
        std::vector<int> offsets(count, 0);
        for (int sub = 0; sub < count; ++sub) {
            int rest = sub;
            for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
                int dim = layout.factor(factors[k]).dimension;
                offsets[sub] += (rest % dim) * layout.stride(factors[k]);
                rest /= dim;
            }
        }
        return offsets;
    };
    std::vector<int> kept_offsets = offsets_for(kept_factors);
    std::vector<int> traced_offsets = offsets_for(traced_factors);

    const int kept_dim = static_cast<int>(kept_offsets.size());
    Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
    const Eigen::MatrixXcd& full = rho.entries();
    for (int r = 0; r < kept_dim; ++r) {
        for (int c = 0; c < kept_dim; ++c) {
            Complex sum(0.0, 0.0);
            for (int t : traced_offsets) {
                sum += full(kept_offsets[r] + t, kept_offsets[c] + t);
            }
            reduced(r, c) = sum;
        }
    }
    return DensityMatrix(SubsystemLayout(std::move(kept_spec)), std::move(reduced), Unchecked{});
}

Operator propagator(const Operator& hamiltonian, double dt) {
    require_hermitian_kind(hamiltonian, "propagator");
    require(std::isfinite(dt), ErrorCode::kArgument, "propagator: dt must be finite");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.entries());
    require(solver.info() == Eigen::Success, ErrorCode::kNumericalConsistency,
            "propagator: eigendecomposition did not converge");
    const Eigen::VectorXd& energies = solver.eigenvalues();
    Eigen::VectorXcd phases(energies.size());
    for (int k = 0; k < energies.size(); ++k) {
        phases[k] = std::exp(Complex(0.0, -energies[k] * dt));
    }
    Eigen::MatrixXcd u =
        solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    const int d = static_cast<int>(u.rows());
    double defect = (u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    require(defect <= kNormTolerance, ErrorCode::kNumericalConsistency,
            "propagator lost unitarity (defect " + std::to_string(defect) + ")");
    return Operator(hamiltonian.layout(), std::move(u), OperatorKind::kUnitary, Unchecked{});
}

StateVector evolve(const StateVector& psi, const Operator& hamiltonian, double dt) {
    return apply_unitary(psi, propagator(hamiltonian, dt));
}

DensityMatrix evolve(const DensityMatrix& rho, const Operator& hamiltonian, double dt) {
    return apply_unitary(rho, propagator(hamiltonian, dt));
}

DynamicalComponent evolve(const DynamicalComponent& state, const Operator& hamiltonian,
                          double dt) {
    Operator u = propagator(hamiltonian, dt);
    return apply_unitary(state, u);
}

StateVector apply_unitary(const StateVector& psi, const Operator& u) {
    require(u.kind() == OperatorKind::kUnitary, ErrorCode::kArgument,
            "apply_unitary: operator is not tagged unitary");
    require_same_layout(psi.layout(), u.layout(), "apply_unitary");
    return StateVector(psi.layout(), u.entries() * psi.amplitudes(), Unchecked{});
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Operator& u) {
    require(u.kind() == OperatorKind::kUnitary, ErrorCode::kArgument,
            "apply_unitary: operator is not tagged unitary");
    require_same_layout(rho.layout(), u.layout(), "apply_unitary");
    return DensityMatrix(rho.layout(), u.entries() * rho.entries() * u.entries().adjoint(),
                         Unchecked{});
}

DynamicalComponent apply_unitary(const DynamicalComponent& state, const Operator& u) {
    if (const auto* psi = std::get_if<StateVector>(&state)) {
        return apply_unitary(*psi, u);
    }
    return apply_unitary(std::get<DensityMatrix>(state), u);
}

double expectation(const StateVector& psi, const Operator& observable) {
    require_hermitian_kind(observable, "expectation");
    require_same_layout(psi.layout(), observable.layout(), "expectation");
    Complex value = psi.amplitudes().dot(observable.entries() * psi.amplitudes());
    require(std::abs(value.imag()) <= kNormTolerance, ErrorCode::kNumericalConsistency,
            "expectation value has a residual imaginary part");
    return value.real();
}

double expectation(const DensityMatrix& rho, const Operator& observable) {
    require_hermitian_kind(observable, "expectation");
    require_same_layout(rho.layout(), observable.layout(), "expectation");
    Complex value = (rho.entries() * observable.entries()).trace();
    require(std::abs(value.imag()) <= kNormTolerance, ErrorCode::kNumericalConsistency,
            "expectation value has a residual imaginary part");
    return value.real();
}

double expectation(const DynamicalComponent& state, const Operator& observable) {
    if (const auto* psi = std::get_if<StateVector>(&state)) {
        return expectation(*psi, observable);
    }
    return expectation(std::get<DensityMatrix>(state), observable);
}

Operator basis_projector(const SubsystemLayout& layout, const std::string& label, int index) {
    int f = layout.factor_index(label);
    require(index >= 0 && index < layout.factor(f).dimension, ErrorCode::kArgument,
            "basis_projector: index " + std::to_string(index) + " out of range for factor '" +
                label + "'");
    const int d = layout.total_dimension();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
    for (int flat = 0; flat < d; ++flat) {
        if (layout.digit(flat, f) == index) {
            p(flat, flat) = Complex(1.0, 0.0);
        }
    }
    return Operator(layout, std::move(p), OperatorKind::kProjector, Unchecked{});
}

DensityMatrix mix(const std::vector<double>& weights, const std::vector<DensityMatrix>& states) {
    require(!states.empty(), ErrorCode::kArgument, "mix: no states given");
    require(weights.size() == states.size(), ErrorCode::kArgument,
            "mix: weight count does not match state count");
    double total = 0.0;
    for (double w : weights) {
        require(w >= 0.0, ErrorCode::kArgument, "mix: negative weight");
        total += w;
    }
    require(std::abs(total - 1.0) <= kNormTolerance, ErrorCode::kNormalization,
            "mix: weights sum to " + std::to_string(total) + ", expected 1");
    const SubsystemLayout& layout = states.front().layout();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(states.front().dimension(),
                                                  states.front().dimension());
    for (std::size_t k = 0; k < states.size(); ++k) {
        require_same_layout(layout, states[k].layout(), "mix");
        sum += weights[k] * states[k].entries();
    }
    return DensityMatrix(layout, std::move(sum), Unchecked{});
}

Operator embed(const SubsystemLayout& layout, const std::vector<std::string>& on,
               const Eigen::MatrixXcd& block, OperatorKind kind) {
    require(!on.empty(), ErrorCode::kArgument, "embed: factor list is empty");

    std::vector<int> on_factors;
    std::vector<SubsystemLayout::Factor> sub_spec;
    for (const std::string& label : on) {
        int f = layout.factor_index(label);
        on_factors.push_back(f);
        sub_spec.push_back(layout.factor(f));
    }
    // Validating the block as an operator over the sub-layout also catches
    // duplicate labels and dimension mismatches, and checks the kind claim
    // at the block's (small) size.
    Operator sub_op(SubsystemLayout(std::move(sub_spec)), block, kind);

    std::vector<int> rest_factors;
    for (int i = 0; i < layout.factor_count(); ++i) {
        bool on_list = false;
        for (int f : on_factors) {
            on_list |= (f == i);
        }
        if (!on_list) {
            rest_factors.push_back(i);
        }
    }

    auto offsets_for = [&](const std::vector<int>& factors) {
        int count = 1;
        for (int f : factors) {
            count *= layout.factor(f).dimension;
        }
        std::vector<int> offsets(count, 0);
        for (int sub = 0; sub < count; ++sub) {
            int rest = sub;
            for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
                int dim = layout.factor(factors[k]).dimension;
                offsets[sub] += (rest % dim) * layout.stride(factors[k]);
                rest /= dim;
            }
        }
        return offsets;
    };
    std::vector<int> on_offsets = offsets_for(on_factors);
    std::vector<int> rest_offsets = offsets_for(rest_factors);

    const int d = layout.total_dimension();
    const int block_dim = static_cast<int>(on_offsets.size());
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(d, d);
    for (int r = 0; r < block_dim; ++r) {
        for (int c = 0; c < block_dim; ++c) {
            Complex value = block(r, c);
            if (value == Complex(0.0, 0.0)) {
                continue;
            }
            for (int rest : rest_offsets) {
                full(on_offsets[r] + rest, on_offsets[c] + rest) = value;
            }
        }
    }
    return Operator(layout, std::move(full), kind, Unchecked{});
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_layout(a.layout(), b.layout(), "commutator");
    return Operator(a.layout(), a.entries() * b.entries() - b.entries() * a.entries(),
                    OperatorKind::kGeneral, Unchecked{});
}

double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.adjoint() * m,
                                                           Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, ErrorCode::kNumericalConsistency,
            "spectral_norm: eigendecomposition did not converge");
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_layout(rho.layout(), sigma.layout(), "trace_distance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries() - sigma.entries(),
                                                           Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, ErrorCode::kNumericalConsistency,
            "trace_distance: eigendecomposition did not converge");
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const StateVector& a, const StateVector& b) {
    require_same_layout(a.layout(), b.layout(), "fidelity");
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double purity(const DensityMatrix& rho) {
    return rho.entries().squaredNorm();
}

}  // namespace dualsim
