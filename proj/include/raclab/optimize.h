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

#ifndef RACLAB_OPTIMIZE_H
#define RACLAB_OPTIMIZE_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "raclab/qstate.h"

namespace raclab {

enum class Separability { Required, Ignored };

/// Bell-diagonal states with |e_i| <= 1. With separability required the
/// feasible set is the octahedron |e1| + |e2| + |e3| <= 1, otherwise the
/// positivity tetrahedron.
struct StateFamilyConstraint {
    Separability separability = Separability::Required;
};

struct OptimizerOptions {
    double grid_step = 0.01;
    /// Golden-section bracket width at which a line search stops.
    double refine_tol = 1e-6;
    int workers = 1;
    /// Nesting order of the grid loops, outermost first.
    std::array<int, 3> axis_order{0, 1, 2};
};

struct FamilyOptimum {
    /// Canonical form e1 >= e2 >= |e3|, e3 >= 0 when separability is
    /// required; otherwise e3 keeps the sign of the product e1 e2 e3.
    BellDiagonalSpec spec;
    double p_min = 0;
    bool separable = false;
    uint64_t grid_points = 0;
};

/// Absolute values sorted in descending order. Worst-case success of the
/// canonical codes is invariant under both operations.
BellDiagonalSpec canonicalize(const BellDiagonalSpec &spec);

/// Maximizes the canonical n->1 code's closed-form worst case over the
/// family: a full grid over [-1, 1]^3, then line searches along the axes
/// and the pairwise (e_i +- e_j) directions until a sweep stops improving.
/// The winner is checked with the PPT test (or the validity test when
/// separability is ignored); a failed check throws std::logic_error.
FamilyOptimum best_separable_bell_diagonal(int n, const StateFamilyConstraint &constraint = {},
                                           const OptimizerOptions &options = {});

struct ComparisonRow {
    std::string label;
    BellDiagonalSpec state;
    double discord = 0;
    double p_min = 0;
    bool separable = false;
};

/// Row for the canonical 2->1 code on `state`, every field computed from
/// the state itself. Correlations below the degeneracy threshold give 1/2.
ComparisonRow comparison_row(const std::string &label, const BellDiagonalSpec &state);

/// E = (1/2, 1/2, 0), the best separable resource for the 2->1 code.
BellDiagonalSpec separable_two_to_one_optimum();

struct CrossoverPoint {
    double q = 0;
    ComparisonRow werner;
    ComparisonRow separable;
    /// Separable row strictly better by more than 1e-12.
    bool separable_wins = false;
    /// |difference| <= 1e-12.
    bool tie = false;
};

/// Werner-assisted vs. best separable 2->1 code for each q in [0, 1].
std::vector<CrossoverPoint> crossover_analysis(const std::vector<double> &q_grid);

/// The separable optimum followed by Werner states whose discord lies in
/// (1/(2 sqrt 2), 1/2).
std::vector<ComparisonRow> discord_efficiency_table();

}  // namespace raclab

#endif
