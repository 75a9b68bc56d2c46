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

#include "dualsim/rng.hpp"

namespace dualsim {

namespace {

// SplitMix64 finalizer (Steele, Lea & Flood; also the seeding mixer of the
// xoshiro family). Bijective on 64-bit words, which guarantees distinct
// substream keys for distinct (seed, event) pairs.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t master_seed, std::uint64_t stream_index) {
    // Two mixing rounds decorrelate the (seed, stream) lattice.
    key_ = mix64(mix64(master_seed) ^ mix64(stream_index * 0xd1342543de82ef95ULL + 1));
}

std::uint64_t CounterRng::next_u64() {
    return mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
}

double CounterRng::next_double() {
    // Top 53 bits -> [0, 1) on the binary64 grid.
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace dualsim
