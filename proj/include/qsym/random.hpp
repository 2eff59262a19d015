// Copyright 2026 The qsym Authors
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
#include <random>

namespace qsym {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from exactly one 64-bit draw.
inline double uniform_draw(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 finalizer.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for trial `trial` of a run with master seed `seed`:
/// splitmix64(seed ^ splitmix64(trial)). Depends on nothing else, so trials
/// can be run in any order or in parallel.
inline uint64_t trial_seed(uint64_t seed, uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial));
}

}  // namespace qsym
