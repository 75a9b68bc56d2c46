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

#include <string>
#include <vector>

#include "dualsim/operators.hpp"
#include "dualsim/state.hpp"

namespace dualsim {

// Kronecker composition. The two layouts must not share factor labels; the
// result's layout is the concatenation (left factors vary slowest).
StateVector tensor_product(const StateVector& a, const StateVector& b);
Operator tensor_product(const Operator& a, const Operator& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state over the named factors (kept in layout order); every other
// factor is traced out. `keep` must be a non-empty proper subset.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

// Propagator exp(-i H dt) of a hermitian generator (hbar = 1), computed by
// eigendecomposition. The result is checked for unitarity.
Operator propagator(const Operator& hamiltonian, double dt);

// One finite step of the Schroedinger / von Neumann equation: the state is
// mapped through exp(-i H dt). Norm and trace are conserved exactly up to
// floating-point rounding; nothing is renormalized.
StateVector evolve(const StateVector& psi, const Operator& hamiltonian, double dt);
DensityMatrix evolve(const DensityMatrix& rho, const Operator& hamiltonian, double dt);
DynamicalComponent evolve(const DynamicalComponent& state, const Operator& hamiltonian, double dt);

// U psi, or U rho U^dag. `u` must carry the unitary kind.
StateVector apply_unitary(const StateVector& psi, const Operator& u);
DensityMatrix apply_unitary(const DensityMatrix& rho, const Operator& u);
DynamicalComponent apply_unitary(const DynamicalComponent& state, const Operator& u);

// Real expectation value <psi|A|psi> or Tr(rho A) of a hermitian observable.
// A residual imaginary part above kNormTolerance raises a numerical
// consistency error.
double expectation(const StateVector& psi, const Operator& observable);
double expectation(const DensityMatrix& rho, const Operator& observable);
double expectation(const DynamicalComponent& state, const Operator& observable);

// Projector |index><index| on the named factor, identity elsewhere.
Operator basis_projector(const SubsystemLayout& layout, const std::string& label, int index);

// Convex mixture sum_k w_k rho_k. Weights must be non-negative and sum to 1
// within kNormTolerance; all states must share one layout.
DensityMatrix mix(const std::vector<double>& weights, const std::vector<DensityMatrix>& states);

// ---- Small derived utilities used across the model and experiment layers.

// Embeds a block acting on the named factors (in the given order, row-major)
// into the full layout, identity on the remaining factors.
Operator embed(const SubsystemLayout& layout,
               const std::vector<std::string>& on,
               const Eigen::MatrixXcd& block,
               OperatorKind kind);

// A B - B A, tagged general.
Operator commutator(const Operator& a, const Operator& b);

// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& m);

// Trace distance (1/2)||rho - sigma||_1 via the eigenvalues of the
// (hermitian) difference.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

// Tr(rho^2).
double purity(const DensityMatrix& rho);

}  // namespace dualsim
