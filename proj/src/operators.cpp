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

#include "dualsim/operators.hpp"

#include "dualsim/error.hpp"
#include "dualsim/tolerances.hpp"

namespace dualsim {

const char* kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::kHermitian:
            return "hermitian";
        case OperatorKind::kUnitary:
            return "unitary";
        case OperatorKind::kProjector:
            return "projector";
        case OperatorKind::kGeneral:
            return "general";
    }
    return "unknown";
}

Operator::Operator(SubsystemLayout layout, Eigen::MatrixXcd entries, OperatorKind kind)
    : layout_(std::move(layout)), entries_(std::move(entries)), kind_(kind) {
    require(entries_.rows() == entries_.cols(), ErrorCode::kArgument, "operator must be square");
    require(entries_.rows() == layout_.total_dimension(), ErrorCode::kArgument,
            "operator size does not match layout dimension");
    const int d = static_cast<int>(entries_.rows());
    auto defect_to = [&](const Eigen::MatrixXcd& target) {
        return (entries_ * entries_.adjoint() - target).cwiseAbs().maxCoeff();
    };
    switch (kind_) {
        case OperatorKind::kHermitian: {
            double defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
            require(defect <= kNormTolerance, ErrorCode::kArgument,
                    "matrix tagged hermitian is not hermitian (defect " +
                        std::to_string(defect) + ")");
            break;
        }
        case OperatorKind::kUnitary: {
            double defect = defect_to(Eigen::MatrixXcd::Identity(d, d));
            require(defect <= kNormTolerance, ErrorCode::kArgument,
                    "matrix tagged unitary is not unitary (defect " + std::to_string(defect) +
                        ")");
            break;
        }
        case OperatorKind::kProjector: {
            double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
            double idem = (entries_ * entries_ - entries_).cwiseAbs().maxCoeff();
            require(herm <= kNormTolerance && idem <= kNormTolerance, ErrorCode::kArgument,
                    "matrix tagged projector is not an orthogonal projector");
            break;
        }
        case OperatorKind::kGeneral:
            break;
    }
}

Operator::Operator(SubsystemLayout layout, Eigen::MatrixXcd entries, OperatorKind kind, Unchecked)
    : layout_(std::move(layout)), entries_(std::move(entries)), kind_(kind) {}

Operator Operator::adjoint() const {
    return Operator(layout_, entries_.adjoint(), kind_, Unchecked{});
}

Operator Operator::identity(SubsystemLayout layout, OperatorKind kind) {
    int d = layout.total_dimension();
    return Operator(std::move(layout), Eigen::MatrixXcd::Identity(d, d), kind, Unchecked{});
}

}  // namespace dualsim
