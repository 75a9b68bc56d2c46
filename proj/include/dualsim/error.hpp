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

#include <stdexcept>
#include <string>

namespace dualsim {

// Stable error categories. Every failure raised by the library carries one of
// these codes; the command-line front end prints the code name and maps the
// whole family to exit status 1.
enum class ErrorCode {
    kArgument,                // malformed or out-of-range call arguments
    kComposition,             // label clash when composing layouts
    kUnsupportedScenario,     // scenario shape outside an operation's domain
    kCapacity,                // composite dimension above the configured cap
    kDegenerateDistribution,  // all-zero outcome weights, nothing to sample
    kNumericalConsistency,    // internal cross-check failed (lost precision)
    kSchema,                  // scenario file violates the schema
    kNormalization,           // state norm / trace / distribution sum off
    kSchedule,                // overlapping, unordered or dangling steps
    kIo,                      // filesystem problem
};

// Short wire name for an error code, e.g. "E_SCHEMA".
const char* error_code_name(ErrorCode code);

// The single exception type thrown by the library. `what()` already includes
// the code name so uncaught errors stay diagnosable.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const {
        return code_;
    }
    const char* code_name() const {
        return error_code_name(code_);
    }

  private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// Throws Error(code, message) unless `condition` holds.
inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) {
        throw Error(code, message);
    }
}

}  // namespace dualsim
