// Copyright 2026 The rac-lab Authors
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

#ifndef RACLAB_RNG_H
#define RACLAB_RNG_H

#include <cstdint>

namespace raclab {

/// SplitMix64 expansion of a single 64-bit seed.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Doubles in [0, 1) take the top 53 bits: (next() >> 11) * 2^-53.
/// Satisfies UniformRandomBitGenerator so it can drive <random> as well.
class SplitMix64 {
  public:
    using result_type = uint64_t;

    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    uint64_t operator()() {
        return next();
    }
    static constexpr uint64_t min() {
        return 0;
    }
    static constexpr uint64_t max() {
        return ~uint64_t{0};
    }

  private:
    uint64_t state_;
};

}  // namespace raclab

#endif
