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

#include "dualsim/state.hpp"

#include <cmath>
#include <cstring>

#include "dualsim/error.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

StateVector::StateVector(SubsystemLayout layout, Eigen::VectorXcd amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    require(amplitudes_.size() == layout_.total_dimension(), ErrorCode::kArgument,
            "amplitude count " + std::to_string(amplitudes_.size()) +
                " does not match layout dimension " +
                std::to_string(layout_.total_dimension()));
    double n = amplitudes_.norm();
    require(std::abs(n - 1.0) <= kNormTolerance, ErrorCode::kNormalization,
            "state vector norm " + std::to_string(n) + " is not 1 within tolerance");
}

StateVector::StateVector(SubsystemLayout layout, Eigen::VectorXcd amplitudes, Unchecked)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis_state(SubsystemLayout layout, int flat_index) {
    require(flat_index >= 0 && flat_index < layout.total_dimension(), ErrorCode::kArgument,
            "basis index out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(layout.total_dimension());
    v[flat_index] = Complex(1.0, 0.0);
    return StateVector(std::move(layout), std::move(v), Unchecked{});
}

DensityMatrix::DensityMatrix(SubsystemLayout layout, Eigen::MatrixXcd entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
    require(entries_.rows() == entries_.cols(), ErrorCode::kArgument,
            "density matrix must be square");
    require(entries_.rows() == layout_.total_dimension(), ErrorCode::kArgument,
            "density matrix size does not match layout dimension");
    double herm_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    require(herm_defect <= kNormTolerance, ErrorCode::kNormalization,
            "density matrix is not hermitian (defect " + std::to_string(herm_defect) + ")");
    Complex tr = entries_.trace();
    require(std::abs(tr - Complex(1.0, 0.0)) <= kNormTolerance, ErrorCode::kNormalization,
            "density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_,
                                                           Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, ErrorCode::kNumericalConsistency,
            "eigenvalue check failed to converge");
    require(solver.eigenvalues().minCoeff() >= -kNormTolerance, ErrorCode::kNormalization,
            "density matrix has a negative eigenvalue");
}

DensityMatrix::DensityMatrix(SubsystemLayout layout, Eigen::MatrixXcd entries, Unchecked)
    : layout_(std::move(layout)), entries_(std::move(entries)) {}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    return DensityMatrix(psi.layout(), psi.amplitudes() * psi.amplitudes().adjoint(),
                         Unchecked{});
}

const SubsystemLayout& layout_of(const DynamicalComponent& state) {
    return std::visit([](const auto& s) -> const SubsystemLayout& { return s.layout(); }, state);
}

bool is_pure(const DynamicalComponent& state) {
    return std::holds_alternative<StateVector>(state);
}

DensityMatrix as_density(const DynamicalComponent& state) {
    if (const auto* psi = std::get_if<StateVector>(&state)) {
        return DensityMatrix::pure(*psi);
    }
    return std::get<DensityMatrix>(state);
}

double basis_weight(const DynamicalComponent& state, int flat_index) {
    if (const auto* psi = std::get_if<StateVector>(&state)) {
        return std::norm(psi->amplitudes()[flat_index]);
    }
    return std::get<DensityMatrix>(state).entries()(flat_index, flat_index).real();
}

bool bit_identical(const DynamicalComponent& a, const DynamicalComponent& b) {
    if (a.index() != b.index()) {
        return false;
    }
    auto same = [](const auto* pa, std::size_t count, const auto* pb) {
        return std::memcmp(pa, pb, count * sizeof(*pa)) == 0;
    };
    if (const auto* psi = std::get_if<StateVector>(&a)) {
        const auto& phi = std::get<StateVector>(b);
        return psi->layout() == phi.layout() && psi->dimension() == phi.dimension() &&
               same(psi->amplitudes().data(), psi->amplitudes().size(), phi.amplitudes().data());
    }
    const auto& ra = std::get<DensityMatrix>(a);
    const auto& rb = std::get<DensityMatrix>(b);
    return ra.layout() == rb.layout() && ra.dimension() == rb.dimension() &&
           same(ra.entries().data(), ra.entries().size(), rb.entries().data());
}

}  // namespace dualsim
