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

#ifndef RACLAB_BITS_H
#define RACLAB_BITS_H

#include <cstdint>
#include <string>
#include <string_view>

namespace raclab {

// Inputs x are n-bit strings "x1 x2 ... xn" stored as integers with x1 in
// the most significant position, so the label "01" is the integer 1.
// Bit indices are zero-based internally and one-based in every file format.

inline int input_bit(uint32_t x, int i, int n) {
    return static_cast<int>((x >> (n - 1 - i)) & 1u);
}

inline uint32_t input_count(int n) {
    return uint32_t{1} << n;
}

std::string input_label(uint32_t x, int n);

/// Throws ConfigError when the label is not exactly n characters of 0/1.
uint32_t parse_input_label(std::string_view label, int n);

}  // namespace raclab

#endif
