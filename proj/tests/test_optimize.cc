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

#include <cmath>

#include <gtest/gtest.h>

#include "raclab/optimize.h"
#include "raclab/quantum_rac.h"

using namespace raclab;

namespace {

const double kP2 = 0.5 * (1 + 1 / (2 * std::sqrt(2.0)));
const double kP3 = 0.5 * (1 + 1 / (3 * std::sqrt(3.0)));

}  // namespace

TEST(Canonicalize, AbsoluteDescending) {
    EXPECT_EQ(canonicalize({-0.1, 0.5, -0.3}), (BellDiagonalSpec{0.5, 0.3, 0.1}));
}

TEST(BestSeparable, TwoToOne) {
    FamilyOptimum r = best_separable_bell_diagonal(2);
    EXPECT_NEAR(r.p_min, kP2, 1e-6);
    EXPECT_NEAR(r.p_min, 0.676777, 1e-6);
    EXPECT_NEAR(r.spec.e1, 0.5, 1e-4);
    EXPECT_NEAR(r.spec.e2, 0.5, 1e-4);
    EXPECT_NEAR(r.spec.e3, 0, 1e-4);
    EXPECT_TRUE(r.separable);
    EXPECT_TRUE(is_separable(r.spec.to_state()));
    EXPECT_LE(r.spec.e1 + r.spec.e2 + r.spec.e3, 1 + 1e-9);
    EXPECT_GT(r.grid_points, 0u);
}

TEST(BestSeparable, ThreeToOne) {
    FamilyOptimum r = best_separable_bell_diagonal(3);
    EXPECT_NEAR(r.p_min, kP3, 1e-6);
    EXPECT_NEAR(r.p_min, 0.596225, 1e-6);
    for (double e : r.spec.values()) {
        EXPECT_NEAR(e, 1.0 / 3, 1e-4);
    }
    EXPECT_TRUE(is_separable(r.spec.to_state()));
}

TEST(BestSeparable, InvariantUnderGridAxisOrder) {
    for (int n : {2, 3}) {
        OptimizerOptions a;
        OptimizerOptions b;
        b.axis_order = {2, 0, 1};
        OptimizerOptions c;
        c.axis_order = {1, 2, 0};
        double pa = best_separable_bell_diagonal(n, {}, a).p_min;
        EXPECT_NEAR(best_separable_bell_diagonal(n, {}, b).p_min, pa, 1e-9);
        EXPECT_NEAR(best_separable_bell_diagonal(n, {}, c).p_min, pa, 1e-9);
    }
}

TEST(BestSeparable, WorkerCountDoesNotMatter) {
    OptimizerOptions one;
    OptimizerOptions three;
    three.workers = 3;
    FamilyOptimum a = best_separable_bell_diagonal(2, {}, one);
    FamilyOptimum b = best_separable_bell_diagonal(2, {}, three);
    EXPECT_EQ(a.p_min, b.p_min);
    EXPECT_EQ(a.spec, b.spec);
}

TEST(BestSeparable, IgnoringSeparabilityReachesMaximallyEntangled) {
    StateFamilyConstraint c;
    c.separability = Separability::Ignored;
    FamilyOptimum r = best_separable_bell_diagonal(2, c);
    EXPECT_NEAR(r.p_min, 0.5 * (1 + 1 / std::sqrt(2.0)), 1e-6);
    EXPECT_FALSE(r.separable);
    EXPECT_TRUE(is_valid_state(r.spec.to_state()));
    EXPECT_NEAR(r.spec.e1, 1, 1e-4);
    EXPECT_NEAR(r.spec.e2, 1, 1e-4);
}

TEST(Crossover, Examples) {
    auto pts = crossover_analysis({0.4, 0.5, 0.8});
    ASSERT_EQ(pts.size(), 3u);
    EXPECT_TRUE(pts[0].separable_wins);
    EXPECT_NEAR(pts[0].separable.p_min, 0.676777, 1e-6);
    EXPECT_NEAR(pts[0].werner.p_min, 0.641421, 1e-6);
    EXPECT_TRUE(pts[1].tie);
    EXPECT_NEAR(pts[1].werner.p_min, pts[1].separable.p_min, 1e-12);
    EXPECT_FALSE(pts[2].separable_wins);
    EXPECT_FALSE(pts[2].tie);
}

TEST(Crossover, FlagsExactlyTheOpenInterval) {
    std::vector<double> grid;
    for (int k = 0; k <= 100; k++) {
        grid.push_back(k / 100.0);
    }
    for (const auto &pt : crossover_analysis(grid)) {
        bool claim = pt.q > 1.0 / 3 && pt.q < 0.5;
        EXPECT_EQ(pt.separable_wins && !pt.werner.separable, claim) << pt.q;
        if (pt.q > 0.5) {
            EXPECT_FALSE(pt.separable_wins);
        }
    }
}

TEST(DiscordTable, Rows) {
    auto rows = discord_efficiency_table();
    ASSERT_GE(rows.size(), 2u);
    const ComparisonRow &sep = rows.front();
    EXPECT_NEAR(sep.discord, 0.353553, 1e-6);
    EXPECT_NEAR(sep.p_min, 0.676777, 1e-6);
    EXPECT_TRUE(sep.separable);
    bool saw_045 = false;
    for (size_t k = 1; k < rows.size(); k++) {
        EXPECT_GT(rows[k].discord, sep.discord);
        EXPECT_LT(rows[k].p_min, sep.p_min);
        EXPECT_NEAR(rows[k].discord, geometric_discord_bell_diagonal(rows[k].state), 1e-12);
        if (std::abs(rows[k].discord - 0.45) < 1e-12) {
            saw_045 = true;
            EXPECT_NEAR(rows[k].p_min, 0.659099, 1e-6);
        }
    }
    EXPECT_TRUE(saw_045);
}

TEST(DiscordTable, BoundaryWernerState) {
    ComparisonRow r = comparison_row("boundary", werner(1 / (2 * std::sqrt(2.0))));
    EXPECT_NEAR(r.discord, 1 / (2 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(r.p_min, 0.625, 1e-12);
    EXPECT_LT(r.p_min, kP2);
}

TEST(ComparisonRowTest, DegenerateGivesOneHalf) {
    ComparisonRow r = comparison_row("noise", werner(0));
    EXPECT_EQ(r.p_min, 0.5);
    EXPECT_EQ(r.discord, 0);
    EXPECT_TRUE(r.separable);
}
