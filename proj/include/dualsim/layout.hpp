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

namespace dualsim {

// Ordered list of labeled finite-dimensional tensor factors.
//
// Flat indices are row-major with the first factor varying slowest, i.e. for
// factors (A, B) the flat index of |a>|b> is a * dim(B) + b. All states and
// operators carry a layout so that compositions can be checked for label
// clashes and partial traces can address factors by name.
class SubsystemLayout {
  public:
    struct Factor {
        std::string label;
        int dimension;

        bool operator==(const Factor&) const = default;
    };

    // Requires at least one factor, unique non-empty labels and every
    // dimension >= 2.
    explicit SubsystemLayout(std::vector<Factor> factors);

    int total_dimension() const {
        return total_dimension_;
    }
    int factor_count() const {
        return static_cast<int>(factors_.size());
    }
    const Factor& factor(int index) const;
    const std::vector<Factor>& factors() const {
        return factors_;
    }

    bool has_factor(const std::string& label) const;
    // Position of the labeled factor; throws if the label is unknown.
    int factor_index(const std::string& label) const;
    int dimension_of(const std::string& label) const;

    // Row-major stride of a factor: the flat-index increment when the
    // factor's digit increases by one.
    int stride(int factor_index) const;

    // Value of one factor's digit inside a flat index.
    int digit(int flat_index, int factor_index) const;

    // Copy of `flat_index` with one factor's digit replaced.
    int with_digit(int flat_index, int factor_index, int value) const;

    bool operator==(const SubsystemLayout& other) const {
        return factors_ == other.factors_;
    }

    // Concatenation of two layouts; the label sets must be disjoint.
    static SubsystemLayout concat(const SubsystemLayout& a, const SubsystemLayout& b);

  private:
    std::vector<Factor> factors_;
    std::vector<int> strides_;
    int total_dimension_ = 0;
};

}  // namespace dualsim
