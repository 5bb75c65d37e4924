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

#ifndef RACLAB_CLASSICAL_RAC_H
#define RACLAB_CLASSICAL_RAC_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raclab/evaluation.h"

namespace raclab {

/// What Alice can do with her shared bit r_a for one fixed input.
enum class EncodingFunction { Zero, One, Identity, Negation };

/// Deterministic n->1 code assisted by two shared bits (r_a, r_b).
///
/// encoding[x * 2 + r_a] is the message bit c(x, r_a) and
/// decoding[i * 4 + c * 2 + r_b] is Bob's guess of x_i (zero-based i).
struct ClassicalStrategy {
    int n = 0;
    std::vector<uint8_t> encoding;
    std::vector<uint8_t> decoding;

    int encode(uint32_t x, int r_a) const {
        return encoding[x * 2 + static_cast<uint32_t>(r_a)];
    }
    int decode(int i, int c, int r_b) const {
        return decoding[static_cast<size_t>(i * 4 + c * 2 + r_b)];
    }
    EncodingFunction encoding_function(uint32_t x) const;

    /// Throws InvalidArgument on wrong table sizes or non-bit entries.
    void validate() const;

    /// Bit k of `encoding_bits` fills encoding[k], bit k of `decoding_bits`
    /// fills decoding[k]. For n = 2 both indices range over [0, 256).
    static ClassicalStrategy from_bits(int n, uint64_t encoding_bits, uint64_t decoding_bits);
    uint64_t encoding_bits() const;
    uint64_t decoding_bits() const;

    bool operator==(const ClassicalStrategy &) const = default;
};

/// The optimal 2->1 code: Alice uses c = r_a, 0, 1, 1 xor r_a on inputs
/// 00, 01, 10, 11; Bob outputs g(c, r_b) = (0,1), (0,0), (1,0), (1,1).
ClassicalStrategy optimal_two_bit_code();

/// Joint law of the shared bits; p[2k + l] = Pr(r_a = k, r_b = l).
struct SharedDistribution {
    std::array<double, 4> p{};

    double at(int k, int l) const {
        return p[static_cast<size_t>(2 * k + l)];
    }
    static SharedDistribution uniform() {
        return {{0.25, 0.25, 0.25, 0.25}};
    }
    /// Entries >= -1e-12 summing to 1 within 1e-12, else InvalidArgument.
    void validate() const;

    bool operator==(const SharedDistribution &) const = default;
};

enum class MarginalConstraint {
    None,
    /// Pr(r_b = 0) = Pr(r_b = 1) = 1/2.
    BobMaximallyMixed,
};

std::string to_string(MarginalConstraint c);
/// Accepts "none" and "bob-mixed"; throws ConfigError otherwise.
MarginalConstraint parse_marginal_constraint(const std::string &s);

EvaluationResult evaluate_strategy(const ClassicalStrategy &strategy, const SharedDistribution &dist);

/// P(x): component i is the probability that Bob outputs 1 for bit i.
std::vector<double> guess_point(const ClassicalStrategy &strategy, const SharedDistribution &dist, uint32_t x);

struct DistributionOptimum {
    SharedDistribution distribution;
    double p_min = 0;
};

/// Maximizes the worst-case success over shared distributions (optionally
/// with Bob's marginal fixed to uniform). Solved exactly as the linear
/// program max t s.t. sum_kl p_kl s[x][i][kl] >= t with vertex enumeration;
/// duplicate and dominated success rows are dropped first since they do not
/// change the feasible region.
DistributionOptimum optimal_distribution(const ClassicalStrategy &strategy, MarginalConstraint constraint);

/// True iff two distinct inputs use the same function r_a -> c.
bool has_duplicate_encoding(const ClassicalStrategy &strategy);

// Relabelings that preserve the LP optimum of a strategy.

/// c -> 1 xor c on both sides of the channel.
ClassicalStrategy flip_message(const ClassicalStrategy &s);
/// Relabel Alice's shared bit (moves mass p_kl -> p_(1-k)l).
ClassicalStrategy flip_alice_bit(const ClassicalStrategy &s);
/// Relabel Bob's shared bit (moves mass p_kl -> p_k(1-l)).
ClassicalStrategy flip_bob_bit(const ClassicalStrategy &s);
/// Input bit i of the new strategy is input bit perm[i] of the old one.
ClassicalStrategy permute_inputs(const ClassicalStrategy &s, const std::vector<int> &perm);
/// Exchanges the values 0 and 1 of input bit j.
ClassicalStrategy flip_input_value(const ClassicalStrategy &s, int j);

enum class SearchMode { Exhaustive, Pruned, Sampled };
std::string to_string(SearchMode m);

/// m-level tree of 2->1 codes for a 4->1 task: `low` encodes (x1, x2) into
/// c1, `high` encodes (x3, x4) into c2 and `outer` encodes (c1, c2) into the
/// sent bit. Bob decodes the relevant c_j with `outer`, then x_i with the
/// matching inner code. Each code has its own pair of shared bits:
/// distributions[0] for outer, [1] for low, [2] for high.
struct ConcatenatedCode {
    ClassicalStrategy low;
    ClassicalStrategy high;
    ClassicalStrategy outer;
    std::array<SharedDistribution, 3> distributions;
};

EvaluationResult evaluate_concatenated(const ConcatenatedCode &code);

struct SearchReport {
    SearchMode mode = SearchMode::Exhaustive;
    int n = 0;
    MarginalConstraint constraint = MarginalConstraint::None;
    ClassicalStrategy best_strategy;
    SharedDistribution best_distribution;
    /// Set instead of best_strategy by the concatenated search.
    std::optional<ConcatenatedCode> best_concatenated;
    double best_p_min = 0;
    uint64_t strategies_examined = 0;
    /// Encodings certified at <= 1/2 without solving an LP.
    uint64_t pruned = 0;
    uint64_t unpruned = 0;
    uint64_t spot_checks = 0;
    double spot_check_max = 0;
    uint64_t seed = 0;
};

enum class EncodingFilter {
    All,
    /// Only strategies in which two inputs share an encoding function.
    DuplicateOnly,
};

struct ExhaustiveOptions {
    MarginalConstraint constraint = MarginalConstraint::None;
    EncodingFilter filter = EncodingFilter::All;
    /// Solve one LP per orbit of the relabeling group instead of per strategy.
    bool quotient_symmetries = false;
    int workers = 1;
};

/// Every 2->1 strategy (256 encodings x 256 decodings), one LP each.
/// Ties keep the strategy with the smallest (encoding, decoding) index.
SearchReport exhaustive_search(int n, const ExhaustiveOptions &options);

struct PrunedOptions {
    MarginalConstraint constraint = MarginalConstraint::None;
    uint64_t spot_checks = 1000;
    uint64_t seed = 42;
    int workers = 1;
};

/// 3->1 search over maps from the 8 inputs to the 4 encoding functions.
/// Maps that reuse a function are certified at <= 1/2 and skipped; the
/// remaining ones (none exist for 8 > 4) would be solved exhaustively over
/// decodings. A seeded sample of full strategies is solved directly as a
/// spot check of the certificate.
SearchReport pruned_search(int n, const PrunedOptions &options);

struct ConcatenatedOptions {
    uint64_t samples = 100000;
    uint64_t seed = 42;
    int workers = 1;
};

/// Samples 4->1 concatenations of three 2->1 codes, each with its own
/// Bob-maximally-mixed shared pair. Per sample, one SplitMix64 draw r picks
/// the components (bits 0-15 low, 16-31 high, 32-47 outer as
/// ClassicalStrategy::from_bits encoding | decoding << 8), and six more
/// uniform draws u give a random constrained distribution per component,
/// p = (u/2, v/2, 1/2 - u/2, 1/2 - v/2). Each sample is scored with the
/// per-component LP-optimal distributions and with the random ones.
SearchReport concatenated_classical_search(const ConcatenatedOptions &options);

}  // namespace raclab

#endif
