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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "raclab/bits.h"
#include "raclab/classical_rac.h"
#include "raclab/errors.h"
#include "raclab/rng.h"

using namespace raclab;

namespace {

const SharedDistribution kThirds{{1.0 / 3, 1.0 / 3, 1.0 / 3, 0}};

// Worst-case success computed straight from the definition.
double brute_pmin(const ClassicalStrategy &s, const std::array<double, 4> &p) {
    double worst = 1;
    for (uint32_t x = 0; x < input_count(s.n); x++) {
        for (int i = 0; i < s.n; i++) {
            double ok = 0;
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    int c = s.encoding[x * 2 + k];
                    int guess = s.decoding[static_cast<size_t>(i * 4 + c * 2 + l)];
                    ok += guess == ((x >> (s.n - 1 - i)) & 1) ? p[2 * k + l] : 0;
                }
            }
            worst = std::min(worst, ok);
        }
    }
    return worst;
}

// Best worst case over the simplex grid with denominator `den`; a lower
// bound on the LP optimum that is exact when den clears the optimal vertex.
double grid_pmin(const ClassicalStrategy &s, int den, bool bob_mixed) {
    double best = 0;
    for (int a = 0; a <= den; a++) {
        for (int b = 0; a + b <= den; b++) {
            for (int c = 0; a + b + c <= den; c++) {
                int d = den - a - b - c;
                if (bob_mixed && 2 * (a + c) != den) {
                    continue;
                }
                best = std::max(best, brute_pmin(s, {double(a) / den, double(b) / den, double(c) / den,
                                                     double(d) / den}));
            }
        }
    }
    return best;
}

ClassicalStrategy constant_strategy(int n, int value) {
    ClassicalStrategy s;
    s.n = n;
    s.encoding.assign(input_count(n) * 2, 0);
    s.decoding.assign(static_cast<size_t>(n * 4), static_cast<uint8_t>(value));
    return s;
}

ClassicalStrategy random_strategy(SplitMix64 &rng, int n) {
    uint64_t enc_mask = (uint64_t{1} << (input_count(n) * 2)) - 1;
    uint64_t dec_mask = (uint64_t{1} << (n * 4)) - 1;
    return ClassicalStrategy::from_bits(n, rng.next() & enc_mask, rng.next() & dec_mask);
}

}  // namespace

TEST(Strategy, FromBitsRoundTrip) {
    SplitMix64 rng(31);
    for (int k = 0; k < 200; k++) {
        for (int n : {2, 3}) {
            ClassicalStrategy s = random_strategy(rng, n);
            EXPECT_EQ(ClassicalStrategy::from_bits(n, s.encoding_bits(), s.decoding_bits()), s);
        }
    }
}

TEST(Strategy, ValidateRejectsBadTables) {
    ClassicalStrategy s = optimal_two_bit_code();
    s.encoding.pop_back();
    EXPECT_THROW(s.validate(), InvalidArgument);
    s = optimal_two_bit_code();
    s.decoding[3] = 2;
    EXPECT_THROW(s.validate(), InvalidArgument);
}

TEST(Strategy, EncodingFunctionsOfOptimalCode) {
    ClassicalStrategy s = optimal_two_bit_code();
    EXPECT_EQ(s.encoding_function(0), EncodingFunction::Identity);
    EXPECT_EQ(s.encoding_function(1), EncodingFunction::Zero);
    EXPECT_EQ(s.encoding_function(2), EncodingFunction::One);
    EXPECT_EQ(s.encoding_function(3), EncodingFunction::Negation);
}

TEST(SharedDistributionTest, Validate) {
    EXPECT_NO_THROW(kThirds.validate());
    EXPECT_THROW((SharedDistribution{{0.5, 0.5, 0.5, -0.5}}).validate(), InvalidArgument);
    EXPECT_THROW((SharedDistribution{{0.3, 0.3, 0.3, 0.3}}).validate(), InvalidArgument);
}

TEST(EvaluateStrategy, Examples) {
    ClassicalStrategy t1 = optimal_two_bit_code();
    EXPECT_NEAR(evaluate_strategy(t1, kThirds).p_min, 2.0 / 3, 1e-12);
    EXPECT_EQ(evaluate_strategy(constant_strategy(2, 0), kThirds).p_min, 0);
    EXPECT_EQ(evaluate_strategy(constant_strategy(3, 0), SharedDistribution::uniform()).p_min, 0);
    EXPECT_NEAR(evaluate_strategy(t1, SharedDistribution::uniform()).p_min, 0.5, 1e-15);
    EXPECT_NEAR(brute_pmin(t1, {0.25, 0.25, 0.25, 0.25}), 0.5, 1e-15);
}

TEST(EvaluateStrategy, MatchesDefinition) {
    SplitMix64 rng(32);
    for (int k = 0; k < 500; k++) {
        int n = 2 + k % 2;
        ClassicalStrategy s = random_strategy(rng, n);
        double a = rng.uniform(), b = rng.uniform(), c = rng.uniform(), d = rng.uniform();
        double sum = a + b + c + d;
        SharedDistribution dist{{a / sum, b / sum, c / sum, d / sum}};
        EXPECT_NEAR(evaluate_strategy(s, dist).p_min, brute_pmin(s, dist.p), 1e-15);
    }
}

TEST(GuessPoint, OptimalCodeRows) {
    ClassicalStrategy t1 = optimal_two_bit_code();
    const double rows[4][2] = {{1.0 / 3, 1.0 / 3}, {0, 2.0 / 3}, {1, 1.0 / 3}, {2.0 / 3, 2.0 / 3}};
    for (uint32_t x = 0; x < 4; x++) {
        auto pt = guess_point(t1, kThirds, x);
        ASSERT_EQ(pt.size(), 2u);
        EXPECT_NEAR(pt[0], rows[x][0], 1e-12);
        EXPECT_NEAR(pt[1], rows[x][1], 1e-12);
    }
    for (uint32_t x = 0; x < 4; x++) {
        auto pt = guess_point(constant_strategy(2, 0), kThirds, x);
        EXPECT_EQ(pt, (std::vector<double>{0, 0}));
    }
}

TEST(OptimalDistribution, Examples) {
    ClassicalStrategy t1 = optimal_two_bit_code();
    DistributionOptimum best = optimal_distribution(t1, MarginalConstraint::None);
    EXPECT_NEAR(best.p_min, 2.0 / 3, 1e-12);
    for (int k = 0; k < 4; k++) {
        EXPECT_NEAR(best.distribution.p[k], kThirds.p[k], 1e-12);
    }
    EXPECT_LE(optimal_distribution(t1, MarginalConstraint::BobMaximallyMixed).p_min, 0.5 + 1e-9);

}

TEST(OptimalDistribution, CopyingBitOneLeavesBitTwoAtOneHalf) {
    // c = x1 and Bob copies it; bit 2 is guessed from r_b alone.
    ClassicalStrategy copy = constant_strategy(2, 0);
    for (uint32_t x = 0; x < 4; x++) {
        copy.encoding[x * 2] = copy.encoding[x * 2 + 1] = static_cast<uint8_t>(x >> 1);
    }
    for (int c = 0; c < 2; c++) {
        for (int l = 0; l < 2; l++) {
            copy.decoding[static_cast<size_t>(c * 2 + l)] = static_cast<uint8_t>(c);
            copy.decoding[static_cast<size_t>(4 + c * 2 + l)] = static_cast<uint8_t>(l);
        }
    }
    EvaluationResult ev = evaluate_strategy(copy, optimal_distribution(copy, MarginalConstraint::None).distribution);
    for (uint32_t x = 0; x < 4; x++) {
        EXPECT_EQ(ev.at(x, 0), 1.0);
    }
    EXPECT_NEAR(ev.p_min, 0.5, 1e-12);
}

TEST(OptimalDistribution, DominatesPureDistributions) {
    SplitMix64 rng(37);
    for (int n = 0; n < 200; n++) {
        ClassicalStrategy s = random_strategy(rng, 2);
        double best = optimal_distribution(s, MarginalConstraint::None).p_min;
        for (int k = 0; k < 4; k++) {
            std::array<double, 4> p{};
            p[k] = 1;
            EXPECT_LE(brute_pmin(s, p), best + 1e-12);
        }
    }
}

TEST(OptimalDistribution, MatchesSimplexGridOracle) {
    SplitMix64 rng(33);
    for (int k = 0; k < 300; k++) {
        ClassicalStrategy s = random_strategy(rng, 2);
        for (auto c : {MarginalConstraint::None, MarginalConstraint::BobMaximallyMixed}) {
            DistributionOptimum best = optimal_distribution(s, c);
            best.distribution.validate();
            if (c == MarginalConstraint::BobMaximallyMixed) {
                EXPECT_NEAR(best.distribution.p[0] + best.distribution.p[2], 0.5, 1e-12);
            }
            EXPECT_NEAR(best.p_min, evaluate_strategy(s, best.distribution).p_min, 1e-12);
            EXPECT_NEAR(best.p_min, grid_pmin(s, 12, c == MarginalConstraint::BobMaximallyMixed), 1e-12);
        }
    }
}

TEST(HasDuplicateEncoding, Examples) {
    EXPECT_FALSE(has_duplicate_encoding(optimal_two_bit_code()));
    EXPECT_TRUE(has_duplicate_encoding(constant_strategy(2, 0)));
    SplitMix64 rng(34);
    for (int k = 0; k < 500; k++) {
        EXPECT_TRUE(has_duplicate_encoding(random_strategy(rng, 3)));
    }
}

TEST(Relabelings, PreserveLpOptimum) {
    SplitMix64 rng(35);
    for (int k = 0; k < 300; k++) {
        int n = 2 + k % 2;
        ClassicalStrategy s = random_strategy(rng, n);
        double base = optimal_distribution(s, MarginalConstraint::None).p_min;
        EXPECT_NEAR(optimal_distribution(flip_message(s), MarginalConstraint::None).p_min, base, 1e-12);
        EXPECT_NEAR(optimal_distribution(flip_alice_bit(s), MarginalConstraint::None).p_min, base, 1e-12);
        EXPECT_NEAR(optimal_distribution(flip_bob_bit(s), MarginalConstraint::None).p_min, base, 1e-12);
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::reverse(perm.begin(), perm.end());
        EXPECT_NEAR(optimal_distribution(permute_inputs(s, perm), MarginalConstraint::None).p_min, base, 1e-12);
        EXPECT_NEAR(optimal_distribution(flip_input_value(s, n - 1), MarginalConstraint::None).p_min, base, 1e-12);
        // Flipping Alice's bit keeps Bob's marginal, so the constrained value is kept too.
        double mixed = optimal_distribution(s, MarginalConstraint::BobMaximallyMixed).p_min;
        EXPECT_NEAR(optimal_distribution(flip_alice_bit(s), MarginalConstraint::BobMaximallyMixed).p_min, mixed,
                    1e-12);
    }
}

TEST(Relabelings, AreInvolutionsOrPermutations) {
    ClassicalStrategy s = optimal_two_bit_code();
    EXPECT_EQ(flip_message(flip_message(s)), s);
    EXPECT_EQ(flip_alice_bit(flip_alice_bit(s)), s);
    EXPECT_EQ(flip_bob_bit(flip_bob_bit(s)), s);
    EXPECT_EQ(flip_input_value(flip_input_value(s, 0), 0), s);
    EXPECT_EQ(permute_inputs(permute_inputs(s, {1, 0}), {1, 0}), s);
    EXPECT_EQ(permute_inputs(s, {0, 1}), s);
}

TEST(ExhaustiveSearch, UnconstrainedIsTwoThirds) {
    SearchReport r = exhaustive_search(2, {});
    EXPECT_NEAR(r.best_p_min, 2.0 / 3, 1e-9);
    EXPECT_EQ(r.strategies_examined, 65536u);
    EXPECT_EQ(r.mode, SearchMode::Exhaustive);
    EXPECT_NEAR(evaluate_strategy(r.best_strategy, r.best_distribution).p_min, r.best_p_min, 1e-9);
}

TEST(ExhaustiveSearch, BobMixedIsOneHalf) {
    ExhaustiveOptions o;
    o.constraint = MarginalConstraint::BobMaximallyMixed;
    SearchReport r = exhaustive_search(2, o);
    EXPECT_NEAR(r.best_p_min, 0.5, 1e-9);
    EXPECT_NEAR(evaluate_strategy(r.best_strategy, r.best_distribution).p_min, r.best_p_min, 1e-9);
}

TEST(ExhaustiveSearch, DuplicateEncodingsGiveOneHalf) {
    ExhaustiveOptions o;
    o.filter = EncodingFilter::DuplicateOnly;
    SearchReport r = exhaustive_search(2, o);
    EXPECT_NEAR(r.best_p_min, 0.5, 1e-9);
    EXPECT_TRUE(has_duplicate_encoding(r.best_strategy));
}

TEST(ExhaustiveSearch, QuotientMatchesFullRun) {
    for (auto c : {MarginalConstraint::None, MarginalConstraint::BobMaximallyMixed}) {
        ExhaustiveOptions full;
        full.constraint = c;
        ExhaustiveOptions quot = full;
        quot.quotient_symmetries = true;
        SearchReport a = exhaustive_search(2, full);
        SearchReport b = exhaustive_search(2, quot);
        EXPECT_NEAR(a.best_p_min, b.best_p_min, 1e-12);
        EXPECT_LT(b.strategies_examined, a.strategies_examined);
    }
}

TEST(ExhaustiveSearch, IndependentOfWorkerCount) {
    ExhaustiveOptions one;
    ExhaustiveOptions four;
    four.workers = 4;
    SearchReport a = exhaustive_search(2, one);
    SearchReport b = exhaustive_search(2, four);
    EXPECT_EQ(a.best_p_min, b.best_p_min);
    EXPECT_EQ(a.best_strategy, b.best_strategy);
    EXPECT_EQ(a.best_distribution, b.best_distribution);
}

TEST(ExhaustiveSearch, RejectsOtherSizes) {
    EXPECT_THROW(exhaustive_search(3, {}), InvalidArgument);
}

TEST(PrunedSearch, CertifiesOneHalf) {
    PrunedOptions o;
    SearchReport r = pruned_search(3, o);
    EXPECT_EQ(r.unpruned, 0u);
    EXPECT_EQ(r.pruned, r.strategies_examined);
    EXPECT_EQ(r.strategies_examined, 65536u);
    EXPECT_NEAR(r.best_p_min, 0.5, 1e-12);
    EXPECT_EQ(r.spot_checks, 1000u);
    EXPECT_LE(r.spot_check_max, 0.5 + 1e-9);
    EXPECT_NEAR(evaluate_strategy(r.best_strategy, r.best_distribution).p_min, r.best_p_min, 1e-9);
}

TEST(PrunedSearch, SeededAndWorkerIndependent) {
    PrunedOptions a;
    a.spot_checks = 200;
    PrunedOptions b = a;
    b.workers = 3;
    SearchReport ra = pruned_search(3, a);
    SearchReport rb = pruned_search(3, b);
    EXPECT_EQ(ra.spot_check_max, rb.spot_check_max);
    EXPECT_EQ(ra.best_strategy, rb.best_strategy);
}

TEST(PrunedSearch, OptimalCodeOnFirstTwoBits) {
    // Optimal 2->1 encoding of (x1, x2), third bit ignored by Alice; Bob guesses 0 for x3.
    ClassicalStrategy t1 = optimal_two_bit_code();
    ClassicalStrategy s = constant_strategy(3, 0);
    for (uint32_t x = 0; x < 8; x++) {
        for (int k = 0; k < 2; k++) {
            s.encoding[x * 2 + k] = static_cast<uint8_t>(t1.encode(x >> 1, k));
        }
    }
    for (int i = 0; i < 2; i++) {
        for (size_t j = 0; j < 4; j++) {
            s.decoding[static_cast<size_t>(i * 4) + j] = t1.decoding[static_cast<size_t>(i * 4) + j];
        }
    }
    EXPECT_LE(optimal_distribution(s, MarginalConstraint::None).p_min, 0.5 + 1e-9);
    EXPECT_LE(evaluate_strategy(s, kThirds).p_min, 0.5);
}

TEST(ClassicalProperties, LpDominatesUniformAndPigeonhole) {
    SplitMix64 rng(36);
    for (int k = 0; k < 10000; k++) {
        int n = 2 + k % 2;
        ClassicalStrategy s = random_strategy(rng, n);
        double best = optimal_distribution(s, MarginalConstraint::None).p_min;
        EXPECT_GE(best, evaluate_strategy(s, SharedDistribution::uniform()).p_min - 1e-12);
        if (has_duplicate_encoding(s)) {
            EXPECT_LE(best, 0.5 + 1e-9);
        }
    }
}

TEST(Concatenated, ThreeCopiesOfBestConstrainedCode) {
    ExhaustiveOptions o;
    o.constraint = MarginalConstraint::BobMaximallyMixed;
    SearchReport r = exhaustive_search(2, o);
    ConcatenatedCode code{r.best_strategy, r.best_strategy, r.best_strategy,
                          {r.best_distribution, r.best_distribution, r.best_distribution}};
    EXPECT_LE(evaluate_concatenated(code).p_min, 0.5 + 1e-9);
}

TEST(Concatenated, AllConstantComponents) {
    ClassicalStrategy z = constant_strategy(2, 0);
    SharedDistribution u = SharedDistribution::uniform();
    EXPECT_EQ(evaluate_concatenated({z, z, z, {u, u, u}}).p_min, 0);
}

TEST(Concatenated, PerfectInnerCodesWithCopyingOuter) {
    // Outer passes c1 through, inner codes send x1 (or x3) and guess the rest
    // from nothing: bits 1 and 3 are recovered, the others are coin flips.
    ClassicalStrategy copy = constant_strategy(2, 0);
    for (uint32_t x = 0; x < 4; x++) {
        copy.encoding[x * 2] = copy.encoding[x * 2 + 1] = static_cast<uint8_t>(x >> 1);
    }
    for (int c = 0; c < 2; c++) {
        for (int l = 0; l < 2; l++) {
            copy.decoding[static_cast<size_t>(c * 2 + l)] = static_cast<uint8_t>(c);
            copy.decoding[static_cast<size_t>(4 + c * 2 + l)] = static_cast<uint8_t>(l);
        }
    }
    SharedDistribution u = SharedDistribution::uniform();
    EvaluationResult ev = evaluate_concatenated({copy, copy, copy, {u, u, u}});
    for (uint32_t x = 0; x < 16; x++) {
        EXPECT_EQ(ev.at(x, 0), 1.0);
        EXPECT_NEAR(ev.at(x, 1), 0.5, 1e-15);
    }
}

TEST(Concatenated, SampledSearchStaysAtOneHalf) {
    ConcatenatedOptions o;
    o.samples = 5000;
    SearchReport a = concatenated_classical_search(o);
    EXPECT_LE(a.best_p_min, 0.5 + 1e-9);
    ASSERT_TRUE(a.best_concatenated.has_value());
    EXPECT_NEAR(evaluate_concatenated(*a.best_concatenated).p_min, a.best_p_min, 1e-12);
    o.workers = 4;
    SearchReport b = concatenated_classical_search(o);
    EXPECT_EQ(a.best_p_min, b.best_p_min);
    EXPECT_EQ(a.best_concatenated->low, b.best_concatenated->low);
    EXPECT_EQ(a.best_concatenated->outer, b.best_concatenated->outer);
}

TEST(MarginalConstraintNames, RoundTrip) {
    for (auto c : {MarginalConstraint::None, MarginalConstraint::BobMaximallyMixed}) {
        EXPECT_EQ(parse_marginal_constraint(to_string(c)), c);
    }
}
