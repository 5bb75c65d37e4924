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

#ifndef RACLAB_PARALLEL_H
#define RACLAB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace raclab {

/// Worker count to use: `requested` when positive, else RAC_LAB_THREADS when
/// set to a positive integer, else the hardware concurrency (at least 1).
int resolve_workers(int requested);

/// Splits [0, count) into `workers` contiguous blocks and runs
/// body(begin, end) for each on its own thread. Block boundaries depend only
/// on (count, workers); callers write results into per-index slots and
/// reduce serially so the outcome does not depend on scheduling.
void parallel_blocks(size_t count, int workers, const std::function<void(size_t, size_t)> &body);

}  // namespace raclab

#endif
