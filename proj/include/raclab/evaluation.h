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

#ifndef RACLAB_EVALUATION_H
#define RACLAB_EVALUATION_H

#include <cstdint>
#include <vector>

namespace raclab {

/// Per-(x, i) success probabilities of a random access code and their
/// worst case. `success[x * n + i]` with zero-based bit index i.
struct EvaluationResult {
    int n = 0;
    std::vector<double> success;
    double p_min = 0;

    double at(uint32_t x, int i) const {
        return success[x * static_cast<uint32_t>(n) + static_cast<uint32_t>(i)];
    }
};

}  // namespace raclab

#endif
