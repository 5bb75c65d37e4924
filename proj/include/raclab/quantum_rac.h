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

#ifndef RACLAB_QUANTUM_RAC_H
#define RACLAB_QUANTUM_RAC_H

#include <cstdint>
#include <vector>

#include "raclab/evaluation.h"
#include "raclab/qstate.h"

namespace raclab {

/// An n->1 code assisted by one shared qubit pair. On input x Alice measures
/// `alice_direction[x]` and sends her outcome c; to learn bit i Bob measures
/// `bob_direction[i]`, obtains beta_i and outputs beta_i xor c.
struct QuantumRacProtocol {
    int n = 0;
    std::vector<Vec3> alice_direction;
    std::vector<Vec3> bob_direction;

    /// Throws InvalidArgument when tables are incomplete or a direction is
    /// not unit norm.
    void validate() const;
};

/// Required correlation components must satisfy |e_i| >= this.
inline constexpr double kDegeneracyThreshold = 1e-9;

/// The canonical 2->1 (n = 2) or 3->1 (n = 3) code for a Bell-diagonal
/// resource: Alice measures along the normalization of
/// ((-1)^x1 / e1, (-1)^x2 / e2, (-1)^x3 / e3), with the third component
/// zero for n = 2; Bob measures along the coordinate axes.
QuantumRacProtocol canonical_protocol(int n, const BellDiagonalSpec &spec);

/// Unclamped Pr(b_i = x_i) for a single input and zero-based index.
/// Outcome branches with probability below 1e-12 contribute nothing.
double success_probability(const QuantumRacProtocol &protocol, const TwoQubitState &state, uint32_t x, int i);

/// Exact evaluation over every (x, i). Throws InvalidState for an invalid
/// resource state.
EvaluationResult evaluate(const QuantumRacProtocol &protocol, const TwoQubitState &state);

/// Closed-form worst case of the canonical code:
///   1/2 (1 + 1 / sqrt(sum_i e_i^-2)), sum over the first n axes.
double pmin_formula(int n, const BellDiagonalSpec &spec);

/// 1/2 (1 + (d / sqrt 2)^m) for m levels of 2->1 concatenation.
double concatenated_pmin_formula(double discord, int m);

/// Success of m chained stages that each succeed with `base_p`; the final
/// guess is right iff an even number of stages erred.
double concatenated_pmin_recursive(double base_p, int m);

/// Worst case of the 2->1 prepare-and-measure code whose encodings are the
/// Bloch vectors q ((-1)^x1, (-1)^x2, 0) / sqrt 2, read out along x and y.
double prepare_and_measure_pmin(double q);

}  // namespace raclab

#endif
