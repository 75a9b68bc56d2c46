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

namespace dualsim {

// Tolerance for unit-norm, unit-trace, hermiticity and unitarity checks on
// freshly constructed states and operators.
inline constexpr double kNormTolerance = 1e-9;

// A pointer record is conserved by a step when every cross-branch block of
// the step's generator/propagator has operator norm below this bound.
inline constexpr double kBranchTolerance = 1e-10;

// Scenario files may carry amplitudes that are only approximately normalized
// (they are renormalized on load). Beyond this the file is rejected.
inline constexpr double kInputNormTolerance = 1e-6;

// Default ceiling on the composite Hilbert-space dimension. Pointer
// degree-of-freedom replication multiplies dimensions quickly; builders must
// refuse to cross the cap rather than allocate unbounded matrices.
inline constexpr int kDefaultDimensionCap = 4096;

}  // namespace dualsim
