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

#include "raclab/bits.h"
#include "raclab/errors.h"
#include "raclab/quantum_rac.h"
#include "raclab/reproduce.h"
#include "raclab/rng.h"

using namespace raclab;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

// Success of (x, i) summed branch by branch over the 4x4 outcome table, no
// shortcuts through the library's evaluator.
double brute_success(const QuantumRacProtocol &p, const TwoQubitState &s, uint32_t x, int i) {
    double total = 0;
    for (int a = 0; a < 2; a++) {
        double pa = alice_outcome_prob(s, p.alice_direction[x], a);
        if (pa < 1e-12) {
            continue;
        }
        Vec3 b = post_measurement_bob(s, p.alice_direction[x], a);
        int want = input_bit(x, i, p.n) ^ a;
        total += pa * measure_prob(b, p.bob_direction[static_cast<size_t>(i)], want);
    }
    return total;
}

}  // namespace

TEST(CanonicalProtocol, Examples) {
    auto p3 = canonical_protocol(3, {1, -1, 1});
    EXPECT_NEAR(p3.alice_direction[0].x, 1 / kSqrt3, 1e-15);
    EXPECT_NEAR(p3.alice_direction[0].y, -1 / kSqrt3, 1e-15);
    EXPECT_NEAR(p3.alice_direction[0].z, 1 / kSqrt3, 1e-15);

    auto p2 = canonical_protocol(2, {0.5, 0.5, 0});
    EXPECT_NEAR(p2.alice_direction[1].x, 1 / kSqrt2, 1e-15);
    EXPECT_NEAR(p2.alice_direction[1].y, -1 / kSqrt2, 1e-15);
    EXPECT_EQ(p2.alice_direction[1].z, 0);
    EXPECT_EQ(p2.bob_direction.size(), 2u);
    EXPECT_EQ(p2.bob_direction[1], (Vec3{0, 1, 0}));

    EXPECT_THROW(canonical_protocol(2, {0.5, 0, 0.5}), DegenerateState);
    EXPECT_THROW(canonical_protocol(3, {0.5, 0.5, 1e-10}), DegenerateState);
    EXPECT_NO_THROW(canonical_protocol(2, {0.5, 0.5, 0}));
    EXPECT_THROW(canonical_protocol(4, {0.5, 0.5, 0.5}), InvalidArgument);
}

TEST(Evaluate, Examples) {
    double eps = 1e-6;
    BellDiagonalSpec weak{eps, eps, 0};
    EXPECT_NEAR(evaluate(canonical_protocol(2, weak), weak.to_state()).p_min, 0.5, 1e-6);

    BellDiagonalSpec third{1.0 / 3, 1.0 / 3, 1.0 / 3};
    double p = evaluate(canonical_protocol(3, third), third.to_state()).p_min;
    EXPECT_NEAR(p, 0.5 * (1 + 1 / (3 * kSqrt3)), 1e-12);
    EXPECT_NEAR(p, 0.596225, 1e-6);

    EXPECT_NEAR(evaluate(canonical_protocol(2, werner(1)), werner(1).to_state()).p_min, 0.5 * (1 + 1 / kSqrt2),
                1e-12);
}

TEST(Evaluate, InvalidStateRejected) {
    BellDiagonalSpec bad{1, 1, 1};
    EXPECT_THROW(evaluate(canonical_protocol(2, bad), bad.to_state()), InvalidState);
}

TEST(Evaluate, MatchesBranchByBranchSum) {
    SplitMix64 rng(21);
    for (int k = 0; k < 100; k++) {
        TwoQubitState s = random_state(rng);
        QuantumRacProtocol p;
        p.n = k % 2 ? 2 : 3;
        for (uint32_t x = 0; x < input_count(p.n); x++) {
            p.alice_direction.push_back(random_direction(rng));
        }
        for (int i = 0; i < p.n; i++) {
            p.bob_direction.push_back(random_direction(rng));
        }
        EvaluationResult ev = evaluate(p, s);
        double lo = 1;
        for (uint32_t x = 0; x < input_count(p.n); x++) {
            for (int i = 0; i < p.n; i++) {
                EXPECT_NEAR(ev.at(x, i), brute_success(p, s, x, i), 1e-14);
                lo = std::min(lo, ev.at(x, i));
            }
        }
        EXPECT_EQ(ev.p_min, lo);
    }
}

TEST(PminFormula, Examples) {
    EXPECT_NEAR(pmin_formula(2, {0.5, 0.5, 0}), 0.676777, 1e-6);
    EXPECT_NEAR(pmin_formula(2, {0.5, 0.5, 0}), 0.5 * (1 + 1 / (2 * kSqrt2)), 1e-15);
    for (double q : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(pmin_formula(3, werner(q)), 0.5 * (1 + q / kSqrt3), 1e-15);
    }
    EXPECT_NEAR(pmin_formula(2, {1, 1, 1}), 0.5 * (1 + 1 / kSqrt2), 1e-15);
    EXPECT_THROW(pmin_formula(2, {0, 0.5, 0.5}), DegenerateState);
}

TEST(ConcatenatedFormula, Examples) {
    EXPECT_NEAR(concatenated_pmin_formula(1, 1), 0.853553, 1e-6);
    for (int m = 1; m <= 6; m++) {
        EXPECT_EQ(concatenated_pmin_formula(0, m), 0.5);
    }
    EXPECT_NEAR(concatenated_pmin_formula(0.8, 3), 0.590510, 1e-6);
}

TEST(ConcatenatedRecursive, Examples) {
    EXPECT_DOUBLE_EQ(concatenated_pmin_recursive(1, 5), 1);
    EXPECT_DOUBLE_EQ(concatenated_pmin_recursive(0.75, 2), 0.625);
    for (double q : {0.0, 0.3, 0.77, 1.0}) {
        for (int m = 1; m <= 20; m++) {
            EXPECT_NEAR(concatenated_pmin_recursive(0.5 * (1 + q / kSqrt2), m), concatenated_pmin_formula(q, m),
                        1e-12);
        }
    }
    EXPECT_THROW(concatenated_pmin_recursive(0.4, 2), InvalidArgument);
    EXPECT_THROW(concatenated_pmin_recursive(0.7, 0), InvalidArgument);
}

TEST(ConcatenatedRecursive, BruteForceOverErrorPatterns) {
    for (double p : {0.5, 0.6, 0.75, 0.9}) {
        for (int m = 1; m <= 8; m++) {
            double even = 0;
            for (uint32_t mask = 0; mask < (1u << m); mask++) {
                int errors = __builtin_popcount(mask);
                double w = std::pow(1 - p, errors) * std::pow(p, m - errors);
                if (errors % 2 == 0) {
                    even += w;
                }
            }
            EXPECT_NEAR(concatenated_pmin_recursive(p, m), even, 1e-14);
            EXPECT_NEAR(concatenated_pmin_recursive(p, m), 0.5 * (1 + std::pow(2 * p - 1, m)), 1e-12);
        }
    }
}

TEST(PrepareAndMeasure, Examples) {
    EXPECT_DOUBLE_EQ(prepare_and_measure_pmin(0), 0.5);
    EXPECT_NEAR(prepare_and_measure_pmin(1), 0.853553, 1e-6);
    EXPECT_NEAR(prepare_and_measure_pmin(0.6), 0.712132, 1e-6);
    for (int k = 0; k <= 100; k++) {
        double q = k / 100.0;
        EXPECT_NEAR(prepare_and_measure_pmin(q), 0.5 * (1 + q / kSqrt2), 1e-12);
    }
    EXPECT_THROW(prepare_and_measure_pmin(-0.01), InvalidArgument);
    EXPECT_THROW(prepare_and_measure_pmin(1.01), InvalidArgument);
}

// Properties

TEST(QuantumRacProperties, EvaluatorMatchesClosedFormAndIsUniform) {
    SplitMix64 rng(22);
    for (int k = 0; k < 1000; k++) {
        BellDiagonalSpec s = random_bell_diagonal(rng, 1e-3);
        for (int n : {2, 3}) {
            EvaluationResult ev = evaluate(canonical_protocol(n, s), s.to_state());
            EXPECT_NEAR(ev.p_min, pmin_formula(n, s), 1e-10);
            for (double v : ev.success) {
                EXPECT_NEAR(v, ev.p_min, 1e-10);
            }
        }
    }
}

TEST(QuantumRacProperties, MonotoneInEachComponent) {
    SplitMix64 rng(23);
    for (int k = 0; k < 500; k++) {
        BellDiagonalSpec s{0.05 + rng.uniform(), 0.05 + rng.uniform(), 0.05 + rng.uniform()};
        for (int axis = 0; axis < 3; axis++) {
            BellDiagonalSpec t = s;
            double bump = rng.uniform() * 0.5;
            (axis == 0 ? t.e1 : axis == 1 ? t.e2 : t.e3) += bump;
            for (int n : {2, 3}) {
                EXPECT_GE(pmin_formula(n, t), pmin_formula(n, s) - 1e-15);
            }
        }
    }
}

TEST(QuantumRacProperties, SignInvariance) {
    SplitMix64 rng(24);
    for (int k = 0; k < 300; k++) {
        BellDiagonalSpec s = random_bell_diagonal(rng, 1e-3);
        for (int n : {2, 3}) {
            double base = pmin_formula(n, s);
            EXPECT_NEAR(pmin_formula(n, {-s.e1, s.e2, s.e3}), base, 1e-15);
            EXPECT_NEAR(pmin_formula(n, {s.e1, -s.e2, s.e3}), base, 1e-15);
            EXPECT_NEAR(pmin_formula(n, {s.e1, s.e2, -s.e3}), base, 1e-15);
            // Evaluated value on the (valid) state with two signs flipped.
            BellDiagonalSpec f{-s.e1, -s.e2, s.e3};
            EXPECT_NEAR(evaluate(canonical_protocol(n, f), f.to_state()).p_min, base, 1e-10);
        }
    }
}

TEST(QuantumRacProperties, NonBellDiagonalStatesStayInRange) {
    SplitMix64 rng(25);
    for (int k = 0; k < 200; k++) {
        TwoQubitState s = random_state(rng);
        BellDiagonalSpec diag{s.E[0][0], s.E[1][1], s.E[2][2]};
        for (int n : {2, 3}) {
            QuantumRacProtocol p = canonical_protocol(n, diag);
            for (uint32_t x = 0; x < input_count(n); x++) {
                for (int i = 0; i < n; i++) {
                    double v = success_probability(p, s, x, i);
                    EXPECT_GE(v, -1e-12);
                    EXPECT_LE(v, 1 + 1e-12);
                }
            }
        }
    }
}
