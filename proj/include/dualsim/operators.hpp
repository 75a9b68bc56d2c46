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

#include "dualsim/layout.hpp"
#include "dualsim/state.hpp"

namespace dualsim {

enum class OperatorKind {
    kHermitian,
    kUnitary,
    kProjector,
    kGeneral,
};

const char* kind_name(OperatorKind kind);

// Square matrix over a subsystem layout, tagged with the structural property
// it claims. The checking constructor verifies the claim (A = A^dag for
// hermitian, U U^dag = 1 for unitary, P = P^dag = P^2 for projector) within
// kNormTolerance; kGeneral accepts anything square.
class Operator {
  public:
    Operator(SubsystemLayout layout, Eigen::MatrixXcd entries, OperatorKind kind);
    Operator(SubsystemLayout layout, Eigen::MatrixXcd entries, OperatorKind kind, Unchecked);

    const SubsystemLayout& layout() const {
        return layout_;
    }
    const Eigen::MatrixXcd& entries() const {
        return entries_;
    }
    OperatorKind kind() const {
        return kind_;
    }
    int dimension() const {
        return static_cast<int>(entries_.rows());
    }

    // Conjugate transpose; the kind tag is preserved (all three checked
    // kinds are closed under adjoint).
    Operator adjoint() const;

    static Operator identity(SubsystemLayout layout, OperatorKind kind = OperatorKind::kUnitary);

  private:
    SubsystemLayout layout_;
    Eigen::MatrixXcd entries_;
    OperatorKind kind_;
};

}  // namespace dualsim
