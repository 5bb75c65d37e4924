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

#ifndef RACLAB_REPRODUCE_H
#define RACLAB_REPRODUCE_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "raclab/qstate.h"
#include "raclab/rng.h"

namespace raclab {

struct ReproduceOptions {
    int workers = 1;
    uint64_t seed = 42;
    uint64_t concatenated_samples = 100000;
    /// Random instances per randomized check.
    uint64_t random_cases = 1000;
};

/// One row of the reproduction report.
struct CriterionResult {
    int id = 0;
    std::string claim;
    /// Reference value as published ("2/3", "<= 1/2", ...).
    std::string reference;
    double expected = 0;
    double computed = 0;
    /// Worst deviation seen, compared against `tolerance`.
    double deviation = 0;
    double tolerance = 0;
    bool pass = false;
    std::string detail;
};

struct AcceptanceCriterion {
    int id;
    std::string title;
    std::function<CriterionResult(const ReproduceOptions &)> run;
};

/// The thirteen acceptance checks, in order.
const std::vector<AcceptanceCriterion> &acceptance_criteria();

struct ReproductionReport {
    std::vector<CriterionResult> rows;
    bool pass = false;
};

ReproductionReport reproduce_paper(const ReproduceOptions &options);

/// "[PASS] 4 <claim>: computed ... reference ... deviation ... tol ..." on one line.
std::string criterion_line(const CriterionResult &r);

/// Uniformly random direction on the unit sphere.
Vec3 random_direction(SplitMix64 &rng);

/// Random valid state: rho = G G^dagger / Tr(G G^dagger) for a complex
/// Gaussian 4x4 G, in Bloch form.
TwoQubitState random_state(SplitMix64 &rng);

/// Random point of the positivity tetrahedron with every |e_i| >= min_abs.
BellDiagonalSpec random_bell_diagonal(SplitMix64 &rng, double min_abs);

/// Bob's conditional Bloch vector computed on the 4x4 density matrix:
/// Tr_A[(P (x) 1) rho] normalized, P the projector for `alpha` along
/// `alpha_hat`. Independent of the closed-form update.
Vec3 conditional_bloch_from_density_matrix(const TwoQubitState &state, const Vec3 &alpha_hat, int alpha);

}  // namespace raclab

#endif
