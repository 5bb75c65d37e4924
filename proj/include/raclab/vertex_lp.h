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

#ifndef RACLAB_VERTEX_LP_H
#define RACLAB_VERTEX_LP_H

#include <array>
#include <optional>
#include <vector>

namespace raclab {

/// Variables of the max-min program: four shared-bit probabilities
/// (p00, p01, p10, p11) followed by the worst-case level t.
inline constexpr int kLpDim = 5;

using LpVector = std::array<double, kLpDim>;

/// a . z <= b (inequality) or a . z == b (equality).
struct LpConstraint {
    LpVector a{};
    double b = 0;
};

struct LpSolution {
    LpVector z{};
    double value = 0;
    /// Indices into the inequality list that are tight at z.
    std::vector<int> active;
};

/// Maximizes `objective . z` by enumerating every vertex of
/// { z : eq, ineq }. A vertex is the unique solution of all equalities plus
/// (kLpDim - |eq|) tight inequalities; systems with |det| < 1e-12 are
/// skipped, and a candidate is feasible when every inequality holds within
/// 1e-12. Among vertices within 1e-12 of the best value the
/// lexicographically smallest z wins. Returns nullopt when no feasible
/// vertex exists.
std::optional<LpSolution> maximize_by_vertex_enumeration(const LpVector &objective,
                                                         const std::vector<LpConstraint> &equalities,
                                                         const std::vector<LpConstraint> &inequalities);

/// Solves the square system `rows z = rhs` by Gaussian elimination with
/// partial pivoting; nullopt when |det| < 1e-12.
std::optional<LpVector> solve_square(std::array<LpVector, kLpDim> rows, LpVector rhs);

}  // namespace raclab

#endif
