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

#include <cstdint>

namespace dualsim {

// Counter-based generator in the SplitMix64 family. Each measurement event
// gets its own substream derived from (master seed, event index), so event n
// draws the same numbers no matter how many events ran before it, how they
// are batched, or which experiment drives the loop. That substream identity
// is what makes event logs byte-reproducible.
class CounterRng {
  public:
    CounterRng(std::uint64_t master_seed, std::uint64_t stream_index);

    // The derived 64-bit substream key (recorded alongside each event).
    std::uint64_t stream_key() const {
        return key_;
    }

    std::uint64_t next_u64();

    // Uniform double in [0, 1) with 53 random bits.
    double next_double();

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace dualsim
