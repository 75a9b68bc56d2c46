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
#include <complex>
#include <variant>

#include "dualsim/layout.hpp"

namespace dualsim {

using Complex = std::complex<double>;

// Constructor tag that skips invariant validation. Reserved for operation
// results whose invariants hold by construction (e.g. a unitary image of a
// normalized vector); anything built from raw user data goes through the
// checking constructors.
struct Unchecked {};

// Normalized pure state over a subsystem layout.
class StateVector {
  public:
    // Checks that the amplitude count matches the layout and that the
    // Euclidean norm is 1 within kNormTolerance.
    StateVector(SubsystemLayout layout, Eigen::VectorXcd amplitudes);
    StateVector(SubsystemLayout layout, Eigen::VectorXcd amplitudes, Unchecked);

    const SubsystemLayout& layout() const {
        return layout_;
    }
    const Eigen::VectorXcd& amplitudes() const {
        return amplitudes_;
    }
    int dimension() const {
        return static_cast<int>(amplitudes_.size());
    }
    double norm() const {
        return amplitudes_.norm();
    }

    // Computational basis vector |flat_index>.
    static StateVector basis_state(SubsystemLayout layout, int flat_index);

  private:
    SubsystemLayout layout_;
    Eigen::VectorXcd amplitudes_;
};

// Mixed state: hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
  public:
    // Full validation including a spectral positivity check.
    DensityMatrix(SubsystemLayout layout, Eigen::MatrixXcd entries);
    DensityMatrix(SubsystemLayout layout, Eigen::MatrixXcd entries, Unchecked);

    const SubsystemLayout& layout() const {
        return layout_;
    }
    const Eigen::MatrixXcd& entries() const {
        return entries_;
    }
    int dimension() const {
        return static_cast<int>(entries_.rows());
    }
    double trace_real() const {
        return entries_.trace().real();
    }

    // Rank-one projection |psi><psi| of a pure state.
    static DensityMatrix pure(const StateVector& psi);

  private:
    SubsystemLayout layout_;
    Eigen::MatrixXcd entries_;
};

// The dynamical component of a dual state. It is the part that always evolves
// unitarily, regardless of how many pointer records have been sampled; it is
// carried either as a vector (pure input) or as a density matrix (mixed
// input) and never re-normalized, projected or otherwise touched by record
// updates.
using DynamicalComponent = std::variant<StateVector, DensityMatrix>;

const SubsystemLayout& layout_of(const DynamicalComponent& state);
bool is_pure(const DynamicalComponent& state);

// Density-matrix view: the matrix itself, or |psi><psi| for a pure state.
DensityMatrix as_density(const DynamicalComponent& state);

// Probability weight of one flat basis index: |amplitude|^2 or the diagonal
// entry. This is the only quantity record sampling ever reads.
double basis_weight(const DynamicalComponent& state, int flat_index);

// True when both components hold the same representation (pure/mixed) with
// byte-identical entries. Used to demonstrate that record sampling leaves the
// dynamical component untouched at full precision.
bool bit_identical(const DynamicalComponent& a, const DynamicalComponent& b);

}  // namespace dualsim
