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

#include "raclab/classical_rac.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "raclab/bits.h"
#include "raclab/errors.h"
#include "raclab/parallel.h"
#include "raclab/rng.h"
#include "raclab/vertex_lp.h"

namespace raclab {

namespace {

using SuccessRow = std::array<uint8_t, 4>;

bool dominates(const SuccessRow &a, const SuccessRow &b) {
    for (int j = 0; j < 4; j++) {
        if (a[j] < b[j]) {
            return false;
        }
    }
    return true;
}

// Indicator rows s[x][i][2k + l] with duplicates and dominated rows removed.
// A row that dominates another only restates a weaker bound on t.
std::vector<SuccessRow> minimal_success_rows(const ClassicalStrategy &s) {
    std::vector<SuccessRow> rows;
    for (uint32_t x = 0; x < input_count(s.n); x++) {
        for (int i = 0; i < s.n; i++) {
            SuccessRow row{};
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    row[2 * k + l] = s.decode(i, s.encode(x, k), l) == input_bit(x, i, s.n);
                }
            }
            rows.push_back(row);
        }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<SuccessRow> minimal;
    for (size_t a = 0; a < rows.size(); a++) {
        bool redundant = false;
        for (size_t b = 0; b < rows.size() && !redundant; b++) {
            redundant = b != a && dominates(rows[a], rows[b]);
        }
        if (!redundant) {
            minimal.push_back(rows[a]);
        }
    }
    return minimal;
}

ClassicalStrategy blank(int n) {
    ClassicalStrategy s;
    s.n = n;
    s.encoding.assign(input_count(n) * 2, 0);
    s.decoding.assign(static_cast<size_t>(n) * 4, 0);
    return s;
}

std::pair<uint64_t, uint64_t> key_of(const ClassicalStrategy &s) {
    return {s.encoding_bits(), s.decoding_bits()};
}

// True iff no relabeling of s has a smaller (encoding, decoding) key.
bool is_orbit_representative(const ClassicalStrategy &s) {
    auto key = key_of(s);
    std::vector<int> perm(static_cast<size_t>(s.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ClassicalStrategy p = permute_inputs(s, perm);
        for (int flips = 0; flips < 8; flips++) {
            ClassicalStrategy f = p;
            if (flips & 1) {
                f = flip_message(f);
            }
            if (flips & 2) {
                f = flip_alice_bit(f);
            }
            if (flips & 4) {
                f = flip_bob_bit(f);
            }
            for (uint32_t mask = 0; mask < input_count(s.n); mask++) {
                ClassicalStrategy g = f;
                for (int j = 0; j < s.n; j++) {
                    if ((mask >> j) & 1u) {
                        g = flip_input_value(g, j);
                    }
                }
                if (key_of(g) < key) {
                    return false;
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

// Serial argmax in index order; strict comparison keeps the first maximizer.
size_t first_argmax(const std::vector<double> &values) {
    size_t best = values.size();
    for (size_t k = 0; k < values.size(); k++) {
        if (std::isnan(values[k])) {
            continue;
        }
        if (best == values.size() || values[k] > values[best]) {
            best = k;
        }
    }
    return best;
}

}  // namespace

EncodingFunction ClassicalStrategy::encoding_function(uint32_t x) const {
    int c0 = encode(x, 0);
    int c1 = encode(x, 1);
    if (c0 == c1) {
        return c0 == 0 ? EncodingFunction::Zero : EncodingFunction::One;
    }
    return c0 == 0 ? EncodingFunction::Identity : EncodingFunction::Negation;
}

void ClassicalStrategy::validate() const {
    if (n < 2 || n > 16) {
        throw InvalidArgument("strategy input length must lie in [2, 16]");
    }
    if (encoding.size() != input_count(n) * 2 || decoding.size() != static_cast<size_t>(n) * 4) {
        throw InvalidArgument("strategy tables must cover every (x, r_a) and (i, c, r_b)");
    }
    auto is_bit = [](uint8_t v) { return v <= 1; };
    if (!std::all_of(encoding.begin(), encoding.end(), is_bit) ||
        !std::all_of(decoding.begin(), decoding.end(), is_bit)) {
        throw InvalidArgument("strategy tables must contain bits");
    }
}

ClassicalStrategy ClassicalStrategy::from_bits(int n, uint64_t encoding_bits, uint64_t decoding_bits) {
    ClassicalStrategy s = blank(n);
    for (size_t k = 0; k < s.encoding.size(); k++) {
        s.encoding[k] = static_cast<uint8_t>((encoding_bits >> k) & 1u);
    }
    for (size_t k = 0; k < s.decoding.size(); k++) {
        s.decoding[k] = static_cast<uint8_t>((decoding_bits >> k) & 1u);
    }
    return s;
}

uint64_t ClassicalStrategy::encoding_bits() const {
    uint64_t v = 0;
    for (size_t k = 0; k < encoding.size(); k++) {
        v |= uint64_t{encoding[k]} << k;
    }
    return v;
}

uint64_t ClassicalStrategy::decoding_bits() const {
    uint64_t v = 0;
    for (size_t k = 0; k < decoding.size(); k++) {
        v |= uint64_t{decoding[k]} << k;
    }
    return v;
}

ClassicalStrategy optimal_two_bit_code() {
    ClassicalStrategy s = blank(2);
    // c(x, r_a) for r_a = 0, 1
    s.encoding = {0, 1,   // 00: c = r_a
                  0, 0,   // 01: c = 0
                  1, 1,   // 10: c = 1
                  1, 0};  // 11: c = 1 xor r_a
    // g_{c, r_b} = (b1, b2): g00 = (0,1), g01 = (0,0), g10 = (1,0), g11 = (1,1)
    const int g[2][2][2] = {{{0, 1}, {0, 0}}, {{1, 0}, {1, 1}}};
    for (int i = 0; i < 2; i++) {
        for (int c = 0; c < 2; c++) {
            for (int rb = 0; rb < 2; rb++) {
                s.decoding[static_cast<size_t>(i * 4 + c * 2 + rb)] = static_cast<uint8_t>(g[c][rb][i]);
            }
        }
    }
    return s;
}

void SharedDistribution::validate() const {
    double sum = 0;
    for (double v : p) {
        if (!(v >= -1e-12)) {
            throw InvalidArgument("shared distribution has a negative entry");
        }
        sum += v;
    }
    if (std::abs(sum - 1) > 1e-12) {
        throw InvalidArgument("shared distribution must sum to one");
    }
}

std::string to_string(MarginalConstraint c) {
    return c == MarginalConstraint::None ? "none" : "bob-mixed";
}

MarginalConstraint parse_marginal_constraint(const std::string &s) {
    if (s == "none") {
        return MarginalConstraint::None;
    }
    if (s == "bob-mixed") {
        return MarginalConstraint::BobMaximallyMixed;
    }
    throw ConfigError("unknown marginal constraint '" + s + "' (expected none or bob-mixed)");
}

std::string to_string(SearchMode m) {
    switch (m) {
        case SearchMode::Exhaustive:
            return "exhaustive";
        case SearchMode::Pruned:
            return "pruned";
        case SearchMode::Sampled:
            return "sampled";
    }
    return "unknown";
}

EvaluationResult evaluate_strategy(const ClassicalStrategy &strategy, const SharedDistribution &dist) {
    strategy.validate();
    dist.validate();
    EvaluationResult r;
    r.n = strategy.n;
    r.p_min = std::numeric_limits<double>::infinity();
    for (uint32_t x = 0; x < input_count(strategy.n); x++) {
        for (int i = 0; i < strategy.n; i++) {
            double p = 0;
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    if (strategy.decode(i, strategy.encode(x, k), l) == input_bit(x, i, strategy.n)) {
                        p += dist.at(k, l);
                    }
                }
            }
            r.success.push_back(p);
            r.p_min = std::min(r.p_min, p);
        }
    }
    return r;
}

std::vector<double> guess_point(const ClassicalStrategy &strategy, const SharedDistribution &dist, uint32_t x) {
    strategy.validate();
    std::vector<double> point(static_cast<size_t>(strategy.n), 0.0);
    for (int i = 0; i < strategy.n; i++) {
        for (int k = 0; k < 2; k++) {
            for (int l = 0; l < 2; l++) {
                point[static_cast<size_t>(i)] += dist.at(k, l) * strategy.decode(i, strategy.encode(x, k), l);
            }
        }
    }
    return point;
}

DistributionOptimum optimal_distribution(const ClassicalStrategy &strategy, MarginalConstraint constraint) {
    strategy.validate();
    std::vector<LpConstraint> ineq;
    for (const SuccessRow &row : minimal_success_rows(strategy)) {
        // t - sum_j row_j p_j <= 0
        LpConstraint c;
        for (int j = 0; j < 4; j++) {
            c.a[j] = -static_cast<double>(row[j]);
        }
        c.a[4] = 1;
        ineq.push_back(c);
    }
    for (int j = 0; j < 4; j++) {
        LpConstraint c;
        c.a[j] = -1;
        ineq.push_back(c);
    }
    std::vector<LpConstraint> eq{{{1, 1, 1, 1, 0}, 1}};
    if (constraint == MarginalConstraint::BobMaximallyMixed) {
        // p00 + p10 = 1/2; p01 + p11 = 1/2 then follows from normalization.
        eq.push_back({{1, 0, 1, 0, 0}, 0.5});
    }
    auto sol = maximize_by_vertex_enumeration({0, 0, 0, 0, 1}, eq, ineq);
    if (!sol) {
        throw std::logic_error("shared-distribution LP has no vertex");
    }
    DistributionOptimum out;
    for (int j = 0; j < 4; j++) {
        double v = sol->z[j];
        out.distribution.p[j] = std::abs(v) < 1e-14 ? 0.0 : v;
    }
    out.p_min = evaluate_strategy(strategy, out.distribution).p_min;
    return out;
}

bool has_duplicate_encoding(const ClassicalStrategy &strategy) {
    uint32_t count = input_count(strategy.n);
    for (uint32_t x = 0; x < count; x++) {
        for (uint32_t y = x + 1; y < count; y++) {
            if (strategy.encoding_function(x) == strategy.encoding_function(y)) {
                return true;
            }
        }
    }
    return false;
}

ClassicalStrategy flip_message(const ClassicalStrategy &s) {
    ClassicalStrategy out = s;
    for (auto &c : out.encoding) {
        c ^= 1u;
    }
    for (int i = 0; i < s.n; i++) {
        for (int rb = 0; rb < 2; rb++) {
            out.decoding[static_cast<size_t>(i * 4 + rb)] = static_cast<uint8_t>(s.decode(i, 1, rb));
            out.decoding[static_cast<size_t>(i * 4 + 2 + rb)] = static_cast<uint8_t>(s.decode(i, 0, rb));
        }
    }
    return out;
}

ClassicalStrategy flip_alice_bit(const ClassicalStrategy &s) {
    ClassicalStrategy out = s;
    for (uint32_t x = 0; x < input_count(s.n); x++) {
        std::swap(out.encoding[x * 2], out.encoding[x * 2 + 1]);
    }
    return out;
}

ClassicalStrategy flip_bob_bit(const ClassicalStrategy &s) {
    ClassicalStrategy out = s;
    for (size_t k = 0; k < out.decoding.size(); k += 2) {
        std::swap(out.decoding[k], out.decoding[k + 1]);
    }
    return out;
}

ClassicalStrategy permute_inputs(const ClassicalStrategy &s, const std::vector<int> &perm) {
    if (perm.size() != static_cast<size_t>(s.n)) {
        throw InvalidArgument("input permutation has the wrong length");
    }
    ClassicalStrategy out = s;
    for (uint32_t x = 0; x < input_count(s.n); x++) {
        // New input x corresponds to the old input y with y_perm[i] = x_i.
        uint32_t y = 0;
        for (int i = 0; i < s.n; i++) {
            if (input_bit(x, i, s.n)) {
                y |= uint32_t{1} << (s.n - 1 - perm[static_cast<size_t>(i)]);
            }
        }
        out.encoding[x * 2] = s.encoding[y * 2];
        out.encoding[x * 2 + 1] = s.encoding[y * 2 + 1];
    }
    for (int i = 0; i < s.n; i++) {
        for (int k = 0; k < 4; k++) {
            out.decoding[static_cast<size_t>(i * 4 + k)] = s.decoding[static_cast<size_t>(perm[static_cast<size_t>(i)] * 4 + k)];
        }
    }
    return out;
}

ClassicalStrategy flip_input_value(const ClassicalStrategy &s, int j) {
    ClassicalStrategy out = s;
    uint32_t mask = uint32_t{1} << (s.n - 1 - j);
    for (uint32_t x = 0; x < input_count(s.n); x++) {
        out.encoding[x * 2] = s.encoding[(x ^ mask) * 2];
        out.encoding[x * 2 + 1] = s.encoding[(x ^ mask) * 2 + 1];
    }
    for (int k = 0; k < 4; k++) {
        out.decoding[static_cast<size_t>(j * 4 + k)] ^= 1u;
    }
    return out;
}

EvaluationResult evaluate_concatenated(const ConcatenatedCode &code) {
    for (const ClassicalStrategy *s : {&code.low, &code.high, &code.outer}) {
        if (s->n != 2) {
            throw InvalidArgument("concatenated components must be 2->1 codes");
        }
        s->validate();
    }
    for (const auto &d : code.distributions) {
        d.validate();
    }
    const auto &d_outer = code.distributions[0];
    const auto &d_low = code.distributions[1];
    const auto &d_high = code.distributions[2];

    EvaluationResult r;
    r.n = 4;
    r.p_min = std::numeric_limits<double>::infinity();
    for (uint32_t x = 0; x < 16; x++) {
        uint32_t x_low = x >> 2;
        uint32_t x_high = x & 3u;
        for (int i = 0; i < 4; i++) {
            int target = input_bit(x, i, 4);
            double p = 0;
            for (int k1 = 0; k1 < 2; k1++) {
                int c1 = code.low.encode(x_low, k1);
                for (int k2 = 0; k2 < 2; k2++) {
                    int c2 = code.high.encode(x_high, k2);
                    for (int k0 = 0; k0 < 2; k0++) {
                        int c = code.outer.encode(static_cast<uint32_t>(c1 * 2 + c2), k0);
                        for (int l0 = 0; l0 < 2; l0++) {
                            double w0 = d_outer.at(k0, l0);
                            for (int l1 = 0; l1 < 2; l1++) {
                                double w1 = w0 * d_low.at(k1, l1);
                                for (int l2 = 0; l2 < 2; l2++) {
                                    double w = w1 * d_high.at(k2, l2);
                                    int guess;
                                    if (i < 2) {
                                        guess = code.low.decode(i, code.outer.decode(0, c, l0), l1);
                                    } else {
                                        guess = code.high.decode(i - 2, code.outer.decode(1, c, l0), l2);
                                    }
                                    if (guess == target) {
                                        p += w;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            r.success.push_back(p);
            r.p_min = std::min(r.p_min, p);
        }
    }
    return r;
}

SearchReport exhaustive_search(int n, const ExhaustiveOptions &options) {
    if (n != 2) {
        throw InvalidArgument("exhaustive search covers n = 2 only; use the pruned search for n = 3");
    }
    constexpr size_t kEncodings = 256;
    constexpr size_t kDecodings = 256;
    std::vector<double> value(kEncodings * kDecodings, std::numeric_limits<double>::quiet_NaN());

    parallel_blocks(kEncodings, options.workers, [&](size_t begin, size_t end) {
        for (size_t enc = begin; enc < end; enc++) {
            for (size_t dec = 0; dec < kDecodings; dec++) {
                ClassicalStrategy s = ClassicalStrategy::from_bits(2, enc, dec);
                if (options.filter == EncodingFilter::DuplicateOnly && !has_duplicate_encoding(s)) {
                    continue;
                }
                if (options.quotient_symmetries && !is_orbit_representative(s)) {
                    continue;
                }
                value[enc * kDecodings + dec] = optimal_distribution(s, options.constraint).p_min;
            }
        }
    });

    SearchReport report;
    report.mode = SearchMode::Exhaustive;
    report.n = 2;
    report.constraint = options.constraint;
    report.strategies_examined =
        static_cast<uint64_t>(std::count_if(value.begin(), value.end(), [](double v) { return !std::isnan(v); }));
    size_t best = first_argmax(value);
    if (best == value.size()) {
        throw std::logic_error("exhaustive search examined no strategies");
    }
    report.best_strategy = ClassicalStrategy::from_bits(2, best / kDecodings, best % kDecodings);
    DistributionOptimum opt = optimal_distribution(report.best_strategy, options.constraint);
    report.best_distribution = opt.distribution;
    report.best_p_min = opt.p_min;
    report.unpruned = report.strategies_examined;
    return report;
}

SearchReport pruned_search(int n, const PrunedOptions &options) {
    if (n != 3) {
        throw InvalidArgument("pruned search is defined for n = 3");
    }
    constexpr uint32_t kInputs = 8;
    constexpr uint64_t kAssignments = uint64_t{1} << (2 * kInputs);
    constexpr uint64_t kDecodings = uint64_t{1} << 12;

    SearchReport report;
    report.mode = SearchMode::Pruned;
    report.n = 3;
    report.constraint = options.constraint;
    report.seed = options.seed;

    // Witness at exactly 1/2: c = x1, Bob answers c for bit 1 and r_b
    // for bits 2 and 3.
    ClassicalStrategy witness = blank(3);
    for (uint32_t x = 0; x < kInputs; x++) {
        witness.encoding[x * 2] = witness.encoding[x * 2 + 1] = static_cast<uint8_t>(input_bit(x, 0, 3));
    }
    witness.decoding = {0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1};
    DistributionOptimum witness_opt = optimal_distribution(witness, options.constraint);
    report.best_strategy = witness;
    report.best_distribution = witness_opt.distribution;
    report.best_p_min = witness_opt.p_min;

    auto consider = [&](const ClassicalStrategy &s, const DistributionOptimum &opt) {
        if (opt.p_min > report.best_p_min) {
            report.best_strategy = s;
            report.best_distribution = opt.distribution;
            report.best_p_min = opt.p_min;
        }
    };

    static const uint8_t kFunctionTable[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (uint64_t assign = 0; assign < kAssignments; assign++) {
        ClassicalStrategy s = blank(3);
        for (uint32_t x = 0; x < kInputs; x++) {
            uint64_t f = (assign >> (2 * x)) & 3u;
            s.encoding[x * 2] = kFunctionTable[f][0];
            s.encoding[x * 2 + 1] = kFunctionTable[f][1];
        }
        report.strategies_examined++;
        if (has_duplicate_encoding(s)) {
            report.pruned++;
            continue;
        }
        report.unpruned++;
        for (uint64_t dec = 0; dec < kDecodings; dec++) {
            ClassicalStrategy full = ClassicalStrategy::from_bits(3, s.encoding_bits(), dec);
            consider(full, optimal_distribution(full, options.constraint));
        }
    }

    SplitMix64 rng(options.seed);
    std::vector<std::pair<uint64_t, uint64_t>> samples(options.spot_checks);
    for (auto &[enc, dec] : samples) {
        enc = rng.next() & 0xFFFFu;
        dec = rng.next() & 0xFFFu;
    }
    std::vector<double> value(samples.size());
    parallel_blocks(samples.size(), options.workers, [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            auto s = ClassicalStrategy::from_bits(3, samples[k].first, samples[k].second);
            value[k] = optimal_distribution(s, options.constraint).p_min;
        }
    });
    report.spot_checks = samples.size();
    size_t best = first_argmax(value);
    if (best < value.size()) {
        report.spot_check_max = value[best];
        auto s = ClassicalStrategy::from_bits(3, samples[best].first, samples[best].second);
        consider(s, optimal_distribution(s, options.constraint));
    }
    return report;
}

SearchReport concatenated_classical_search(const ConcatenatedOptions &options) {
    if (options.samples < 1) {
        throw InvalidArgument("concatenated search needs at least one sample");
    }
    constexpr size_t kStrategies = 1u << 16;
    auto component = [](uint64_t idx) { return ClassicalStrategy::from_bits(2, idx & 0xFFu, (idx >> 8) & 0xFFu); };

    // LP-optimal Bob-mixed distribution for every 2->1 strategy.
    std::vector<SharedDistribution> lp_table(kStrategies);
    parallel_blocks(kStrategies, options.workers, [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            lp_table[k] = optimal_distribution(component(k), MarginalConstraint::BobMaximallyMixed).distribution;
        }
    });

    struct Sample {
        uint64_t pick;
        std::array<SharedDistribution, 3> random;
    };
    SplitMix64 rng(options.seed);
    std::vector<Sample> samples(options.samples);
    for (auto &s : samples) {
        s.pick = rng.next();
        for (auto &d : s.random) {
            double u = rng.uniform() / 2;
            double v = rng.uniform() / 2;
            d.p = {u, v, 0.5 - u, 0.5 - v};
        }
    }

    auto build = [&](const Sample &s, bool use_lp) {
        ConcatenatedCode code;
        uint64_t low = s.pick & 0xFFFFu;
        uint64_t high = (s.pick >> 16) & 0xFFFFu;
        uint64_t outer = (s.pick >> 32) & 0xFFFFu;
        code.low = component(low);
        code.high = component(high);
        code.outer = component(outer);
        if (use_lp) {
            code.distributions = {lp_table[outer], lp_table[low], lp_table[high]};
        } else {
            code.distributions = s.random;
        }
        return code;
    };

    // Slot 2k scores sample k with LP-optimal components, 2k + 1 with random.
    std::vector<double> value(samples.size() * 2);
    parallel_blocks(samples.size(), options.workers, [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            value[2 * k] = evaluate_concatenated(build(samples[k], true)).p_min;
            value[2 * k + 1] = evaluate_concatenated(build(samples[k], false)).p_min;
        }
    });

    SearchReport report;
    report.mode = SearchMode::Sampled;
    report.n = 4;
    report.constraint = MarginalConstraint::BobMaximallyMixed;
    report.seed = options.seed;
    report.strategies_examined = samples.size();
    size_t best = first_argmax(value);
    report.best_concatenated = build(samples[best / 2], best % 2 == 0);
    report.best_p_min = evaluate_concatenated(*report.best_concatenated).p_min;
    return report;
}

}  // namespace raclab
