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

#include "raclab/bits.h"

#include "raclab/errors.h"

namespace raclab {

std::string input_label(uint32_t x, int n) {
    std::string out(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; i++) {
        if (input_bit(x, i, n)) {
            out[static_cast<size_t>(i)] = '1';
        }
    }
    return out;
}

uint32_t parse_input_label(std::string_view label, int n) {
    if (label.size() != static_cast<size_t>(n)) {
        throw ConfigError("input label '" + std::string(label) + "' must have " + std::to_string(n) + " bits");
    }
    uint32_t x = 0;
    for (char ch : label) {
        if (ch != '0' && ch != '1') {
            throw ConfigError("input label '" + std::string(label) + "' contains a non-binary character");
        }
        x = (x << 1) | static_cast<uint32_t>(ch - '0');
    }
    return x;
}

}  // namespace raclab
