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

#include "dualsim/layout.hpp"

#include <set>

#include "dualsim/error.hpp"

namespace dualsim {

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kArgument:
            return "E_ARG";
        case ErrorCode::kComposition:
            return "E_COMPOSE";
        case ErrorCode::kUnsupportedScenario:
            return "E_UNSUPPORTED";
        case ErrorCode::kCapacity:
            return "E_CAPACITY";
        case ErrorCode::kDegenerateDistribution:
            return "E_DEGENERATE";
        case ErrorCode::kNumericalConsistency:
            return "E_NUMERIC";
        case ErrorCode::kSchema:
            return "E_SCHEMA";
        case ErrorCode::kNormalization:
            return "E_NORM";
        case ErrorCode::kSchedule:
            return "E_SCHED";
        case ErrorCode::kIo:
            return "E_IO";
    }
    return "E_UNKNOWN";
}

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    require(!factors_.empty(), ErrorCode::kArgument, "layout needs at least one factor");
    std::set<std::string> seen;
    for (const Factor& f : factors_) {
        require(!f.label.empty(), ErrorCode::kArgument, "factor label must be non-empty");
        require(f.dimension >= 2, ErrorCode::kArgument,
                "factor '" + f.label + "' has dimension " + std::to_string(f.dimension) +
                    "; every factor must have dimension >= 2");
        require(seen.insert(f.label).second, ErrorCode::kComposition,
                "duplicate factor label '" + f.label + "'");
    }
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i) {
        strides_[i] = strides_[i + 1] * factors_[i + 1].dimension;
    }
    total_dimension_ = strides_[0] * factors_[0].dimension;
}

const SubsystemLayout::Factor& SubsystemLayout::factor(int index) const {
    require(index >= 0 && index < factor_count(), ErrorCode::kArgument,
            "factor index out of range");
    return factors_[index];
}

bool SubsystemLayout::has_factor(const std::string& label) const {
    for (const Factor& f : factors_) {
        if (f.label == label) {
            return true;
        }
    }
    return false;
}

int SubsystemLayout::factor_index(const std::string& label) const {
    for (int i = 0; i < factor_count(); ++i) {
        if (factors_[i].label == label) {
            return i;
        }
    }
    throw Error(ErrorCode::kArgument, "no factor labeled '" + label + "'");
}

int SubsystemLayout::dimension_of(const std::string& label) const {
    return factors_[factor_index(label)].dimension;
}

int SubsystemLayout::stride(int factor_index) const {
    require(factor_index >= 0 && factor_index < factor_count(), ErrorCode::kArgument,
            "factor index out of range");
    return strides_[factor_index];
}

int SubsystemLayout::digit(int flat_index, int factor_index) const {
    return (flat_index / stride(factor_index)) % factors_[factor_index].dimension;
}

int SubsystemLayout::with_digit(int flat_index, int factor_index, int value) const {
    require(value >= 0 && value < factors_[factor_index].dimension, ErrorCode::kArgument,
            "digit value out of range");
    int old = digit(flat_index, factor_index);
    return flat_index + (value - old) * strides_[factor_index];
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& a, const SubsystemLayout& b) {
    std::vector<Factor> merged = a.factors_;
    for (const Factor& f : b.factors_) {
        require(!a.has_factor(f.label), ErrorCode::kComposition,
                "factor label '" + f.label + "' appears on both sides of a composition");
        merged.push_back(f);
    }
    return SubsystemLayout(std::move(merged));
}

}  // namespace dualsim
