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

#include "raclab/reproduce.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "raclab/bits.h"
#include "raclab/classical_rac.h"
#include "raclab/optimize.h"
#include "raclab/quantum_rac.h"

namespace raclab {

namespace {

using std::numbers::sqrt2;
using std::numbers::sqrt3;

double gaussian(SplitMix64 &rng) {
    double u1 = 1 - rng.uniform();
    double u2 = rng.uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

CriterionResult make(int id, std::string claim, std::string reference, double expected, double tolerance) {
    CriterionResult r;
    r.id = id;
    r.claim = std::move(claim);
    r.reference = std::move(reference);
    r.expected = expected;
    r.tolerance = tolerance;
    return r;
}

void note(CriterionResult &r, const std::string &text) {
    if (!r.detail.empty()) {
        r.detail += "; ";
    }
    r.detail += text;
}

CriterionResult exhaustive_two_bit(const ReproduceOptions &o) {
    auto r = make(1, "exhaustive 2->1 classical search", "2/3", 2.0 / 3, 1e-9);
    auto start = std::chrono::steady_clock::now();
    SearchReport rep = exhaustive_search(2, {MarginalConstraint::None, EncodingFilter::All, false, o.workers});
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.computed = rep.best_p_min;
    r.deviation = std::abs(rep.best_p_min - r.expected);
    r.pass = r.deviation <= r.tolerance && seconds < 300 && rep.strategies_examined == 65536;
    note(r, fmt::format("{} strategies, {} the 300 s limit", rep.strategies_examined, seconds < 300 ? "within" : "over"));
    return r;
}

CriterionResult exhaustive_bob_mixed(const ReproduceOptions &o) {
    auto r = make(2, "exhaustive 2->1 search, Bob-maximally-mixed shared bits", "1/2", 0.5, 1e-9);
    SearchReport rep =
        exhaustive_search(2, {MarginalConstraint::BobMaximallyMixed, EncodingFilter::All, false, o.workers});
    r.computed = rep.best_p_min;
    r.deviation = std::abs(rep.best_p_min - r.expected);
    r.pass = r.deviation <= r.tolerance;
    note(r, fmt::format("{} strategies", rep.strategies_examined));
    return r;
}

CriterionResult pruned_three_bit(const ReproduceOptions &o) {
    auto r = make(3, "3->1 classical bound by pruning plus LP spot checks", "<= 1/2", 0.5, 1e-9);
    SearchReport rep = pruned_search(3, {MarginalConstraint::None, o.random_cases, o.seed, o.workers});
    r.computed = std::max(rep.best_p_min, rep.spot_check_max);
    r.deviation = std::max(0.0, r.computed - 0.5);
    r.pass = rep.unpruned == 0 && rep.pruned == rep.strategies_examined && r.deviation <= r.tolerance &&
             rep.spot_checks == o.random_cases;
    note(r, fmt::format("{} encodings, {} unpruned, {} spot checks (max {})", rep.strategies_examined, rep.unpruned,
                        rep.spot_checks, rep.spot_check_max));
    return r;
}

CriterionResult optimal_code_table(const ReproduceOptions &) {
    auto r = make(4, "optimal 2->1 code with biased shared bits, guess points", "2/3", 2.0 / 3, 1e-12);
    ClassicalStrategy s = optimal_two_bit_code();
    SharedDistribution d{{1.0 / 3, 1.0 / 3, 1.0 / 3, 0}};
    r.computed = evaluate_strategy(s, d).p_min;
    r.deviation = std::abs(r.computed - r.expected);
    const double expected_points[4][2] = {{1.0 / 3, 1.0 / 3}, {0, 2.0 / 3}, {1, 1.0 / 3}, {2.0 / 3, 2.0 / 3}};
    for (uint32_t x = 0; x < 4; x++) {
        auto pt = guess_point(s, d, x);
        for (int i = 0; i < 2; i++) {
            r.deviation = std::max(r.deviation, std::abs(pt[static_cast<size_t>(i)] - expected_points[x][i]));
        }
    }
    r.pass = r.deviation <= r.tolerance;
    return r;
}

CriterionResult evaluator_matches_formula(const ReproduceOptions &o) {
    auto r = make(5, "exact evaluator vs closed forms on random Bell-diagonal states", "closed forms", 0, 1e-10);
    SplitMix64 rng(o.seed ^ 0x5u);
    double worst_uniformity = 0;
    for (uint64_t k = 0; k < o.random_cases; k++) {
        BellDiagonalSpec spec = random_bell_diagonal(rng, 1e-3);
        for (int n : {2, 3}) {
            EvaluationResult ev = evaluate(canonical_protocol(n, spec), spec.to_state());
            double f = pmin_formula(n, spec);
            r.deviation = std::max(r.deviation, std::abs(ev.p_min - f));
            auto [lo, hi] = std::minmax_element(ev.success.begin(), ev.success.end());
            worst_uniformity = std::max(worst_uniformity, *hi - *lo);
        }
    }
    r.computed = r.deviation;
    r.pass = r.deviation <= r.tolerance && worst_uniformity <= 1e-10;
    note(r, fmt::format("{} states x 2 codes, per-bit spread {:.2e}", o.random_cases, worst_uniformity));
    return r;
}

CriterionResult werner_family(const ReproduceOptions &) {
    auto r = make(6, "Werner states: P_min = (1 + q/sqrt n)/2 and discord = q", "(1 + q/sqrt n)/2", 0, 1e-12);
    for (int k = 0; k <= 100; k++) {
        double q = k / 100.0;
        BellDiagonalSpec w = werner(q);
        r.deviation = std::max(r.deviation, std::abs(geometric_discord_bell_diagonal(w) - q));
        if (k == 0) {
            continue;
        }
        for (int n : {2, 3}) {
            double expected = (1 + q / std::sqrt(static_cast<double>(n))) / 2;
            double ev = evaluate(canonical_protocol(n, w), w.to_state()).p_min;
            r.deviation = std::max({r.deviation, std::abs(ev - expected), std::abs(pmin_formula(n, w) - expected)});
        }
    }
    r.computed = r.deviation;
    r.pass = r.deviation <= r.tolerance;
    note(r, "q = 0.00 .. 1.00 step 0.01");
    return r;
}

CriterionResult separable_optima(const ReproduceOptions &o) {
    auto r = make(7, "best separable Bell-diagonal resources", "0.677 (n=2), 0.596 (n=3)", 0, 1e-6);
    OptimizerOptions opts;
    opts.workers = o.workers;
    FamilyOptimum two = best_separable_bell_diagonal(2, {}, opts);
    FamilyOptimum three = best_separable_bell_diagonal(3, {}, opts);
    double p2 = (1 + 1 / (2 * sqrt2)) / 2;
    double p3 = (1 + 1 / (3 * sqrt3)) / 2;
    r.deviation = std::max(std::abs(two.p_min - p2), std::abs(three.p_min - p3));
    double comp = std::max({std::abs(two.spec.e1 - 0.5), std::abs(two.spec.e2 - 0.5), std::abs(two.spec.e3),
                            std::abs(three.spec.e1 - 1.0 / 3), std::abs(three.spec.e2 - 1.0 / 3),
                            std::abs(three.spec.e3 - 1.0 / 3)});
    r.computed = two.p_min;
    r.pass = r.deviation <= r.tolerance && comp <= 1e-4 && two.separable && three.separable;
    note(r, fmt::format("n=2 {} at ({:.6f}, {:.6f}, {:.6f}); n=3 {} at ({:.6f}, {:.6f}, {:.6f}); component error {:.2e}",
                        two.p_min, two.spec.e1, two.spec.e2, two.spec.e3, three.p_min, three.spec.e1, three.spec.e2,
                        three.spec.e3, comp));
    return r;
}

CriterionResult concatenation(const ReproduceOptions &) {
    auto r = make(8, "stage recursion vs (1 + (D/sqrt 2)^m)/2", "closed form", 0, 1e-12);
    for (int k = 0; k <= 20; k++) {
        double d = k * 0.05;
        double base = (1 + d / sqrt2) / 2;
        for (int m = 1; m <= 20; m++) {
            r.deviation = std::max(r.deviation,
                                   std::abs(concatenated_pmin_recursive(base, m) - concatenated_pmin_formula(d, m)));
        }
    }
    r.computed = r.deviation;
    r.pass = r.deviation <= r.tolerance;
    note(r, "D = 0.00 .. 1.00 step 0.05, m = 1 .. 20");
    return r;
}

CriterionResult crossover(const ReproduceOptions &) {
    auto r = make(9, "separable optimum beats Werner-assisted 2->1 for 1/3 < q < 1/2", "q = 1/2", 0.5, 1e-12);
    std::vector<double> wins{0.35, 0.40, 0.45, 0.49};
    std::vector<double> loses{0.51, 0.7, 1.0};
    bool ok = true;
    for (const auto &pt : crossover_analysis(wins)) {
        ok = ok && pt.separable_wins && !pt.werner.separable;
    }
    for (const auto &pt : crossover_analysis(loses)) {
        ok = ok && !pt.separable_wins && !pt.tie;
    }
    auto half = crossover_analysis({0.5}).front();
    r.computed = half.werner.p_min;
    r.deviation = std::abs(half.separable.p_min - half.werner.p_min);
    r.pass = ok && half.tie && r.deviation <= r.tolerance;
    return r;
}

CriterionResult ppt_threshold(const ReproduceOptions &) {
    auto r = make(10, "Werner separability flips at q = 1/3", "1/3", 1.0 / 3, 1e-9);
    int mismatches = 0;
    for (int k = 0; k <= 1000; k++) {
        double q = k / 1000.0;
        if (is_separable(werner(q).to_state()) != (q <= 1.0 / 3)) {
            mismatches++;
        }
    }
    bool boundary = is_separable(werner(1.0 / 3).to_state()) && is_separable(werner(1.0 / 3 - 1e-9).to_state()) &&
                    !is_separable(werner(1.0 / 3 + 1e-9).to_state());
    r.computed = 1.0 / 3;
    r.deviation = boundary ? 0 : 1;
    r.pass = mismatches == 0 && boundary;
    note(r, fmt::format("{} grid mismatches over 1001 points", mismatches));
    return r;
}

CriterionResult prepare_and_measure(const ReproduceOptions &) {
    auto r = make(11, "noisy prepare-and-measure 2->1 code", "(1 + q/sqrt 2)/2", 0, 1e-12);
    for (int k = 0; k <= 100; k++) {
        double q = k / 100.0;
        r.deviation = std::max(r.deviation, std::abs(prepare_and_measure_pmin(q) - (1 + q / sqrt2) / 2));
    }
    r.computed = prepare_and_measure_pmin(1);
    r.pass = r.deviation <= r.tolerance;
    return r;
}

CriterionResult concatenated_classical(const ReproduceOptions &o) {
    auto r = make(12, "sampled 4->1 concatenated classical codes (evidence, not proof)", "<= 1/2", 0.5, 1e-9);
    SearchReport rep = concatenated_classical_search({o.concatenated_samples, o.seed, o.workers});
    r.computed = rep.best_p_min;
    r.deviation = std::max(0.0, rep.best_p_min - 0.5);
    r.pass = r.deviation <= r.tolerance && o.concatenated_samples >= 100000;
    note(r, fmt::format("{} samples, seed {}", rep.strategies_examined, o.seed));
    return r;
}

CriterionResult property_suite(const ReproduceOptions &o) {
    auto r = make(13, "property suite", "invariants", 0, 1e-10);
    SplitMix64 rng(o.seed ^ 0xD00Du);
    double normalization = 0, total_bloch = 0, conditional = 0, invariance = 0;
    bool lp_dominates = true;
    double pigeonhole = 0;

    for (uint64_t k = 0; k < o.random_cases; k++) {
        TwoQubitState s = random_state(rng);
        Vec3 d = random_direction(rng);
        Vec3 b = random_direction(rng) * rng.uniform();
        normalization = std::max(normalization, std::abs(measure_prob(b, d, 0) + measure_prob(b, d, 1) - 1));
        Vec3 sum;
        for (int a = 0; a < 2; a++) {
            Vec3 post = post_measurement_bob(s, d, a);
            sum = sum + post * alice_outcome_prob(s, d, a);
            conditional = std::max(conditional, (post - conditional_bloch_from_density_matrix(s, d, a)).norm());
        }
        total_bloch = std::max(total_bloch, (sum - s.b0).norm());
    }

    for (uint64_t k = 0; k < o.random_cases; k++) {
        BellDiagonalSpec spec = random_bell_diagonal(rng, 1e-3);
        auto e = spec.values();
        std::array<int, 3> perm{0, 1, 2};
        int shuffle = static_cast<int>(rng.next() % 6);
        for (int t = 0; t < shuffle; t++) {
            std::next_permutation(perm.begin(), perm.end());
        }
        // Sign patterns with product +1 come from local unitaries and keep the state valid.
        double sx = (rng.next() & 1) ? -1 : 1, sy = (rng.next() & 1) ? -1 : 1, sz = sx * sy;
        BellDiagonalSpec flipped{sx * e[perm[0]], sy * e[perm[1]], sz * e[perm[2]]};
        invariance = std::max(
            invariance, std::abs(geometric_discord_bell_diagonal(flipped) - geometric_discord_bell_diagonal(spec)));
        BellDiagonalSpec signs{sx * spec.e1, sy * spec.e2, sz * spec.e3};
        for (int n : {2, 3}) {
            invariance = std::max(invariance, std::abs(pmin_formula(n, signs) - pmin_formula(n, spec)));
            invariance = std::max(invariance, std::abs(evaluate(canonical_protocol(n, signs), signs.to_state()).p_min -
                                                       evaluate(canonical_protocol(n, spec), spec.to_state()).p_min));
        }
    }

    for (uint64_t k = 0; k < 10 * o.random_cases; k++) {
        int n = (k % 2 == 0) ? 2 : 3;
        uint64_t enc_mask = n == 2 ? 0xFFu : 0xFFFFu;
        uint64_t dec_mask = n == 2 ? 0xFFu : 0xFFFu;
        ClassicalStrategy s = ClassicalStrategy::from_bits(n, rng.next() & enc_mask, rng.next() & dec_mask);
        double best = optimal_distribution(s, MarginalConstraint::None).p_min;
        if (best < evaluate_strategy(s, SharedDistribution::uniform()).p_min - 1e-12) {
            lp_dominates = false;
        }
        if (!has_duplicate_encoding(s)) {
            // Copy the encoding of input 0 onto a random other input.
            uint32_t y = 1 + static_cast<uint32_t>(rng.next() % (input_count(n) - 1));
            s.encoding[y * 2] = s.encoding[0];
            s.encoding[y * 2 + 1] = s.encoding[1];
            best = optimal_distribution(s, MarginalConstraint::None).p_min;
        }
        pigeonhole = std::max(pigeonhole, best);
    }

    bool ok = normalization <= 1e-15 && total_bloch <= 1e-12 && conditional <= 1e-10 && invariance <= 1e-12 &&
              lp_dominates && pigeonhole <= 0.5 + 1e-9;
    r.computed = pigeonhole;
    r.deviation = ok ? 0 : 1;
    r.tolerance = 0;
    r.pass = ok;
    note(r, fmt::format("normalization {:.1e}, total Bloch {:.1e}, Bob update vs density matrix {:.1e}, "
                        "invariance {:.1e}, LP dominance {}, pigeonhole max {}",
                        normalization, total_bloch, conditional, invariance, lp_dominates ? "ok" : "violated",
                        pigeonhole));
    return r;
}

}  // namespace

Vec3 random_direction(SplitMix64 &rng) {
    while (true) {
        Vec3 v{gaussian(rng), gaussian(rng), gaussian(rng)};
        double n = v.norm();
        if (n > 1e-6) {
            return v / n;
        }
    }
}

TwoQubitState random_state(SplitMix64 &rng) {
    std::array<std::complex<double>, 16> g;
    for (auto &z : g) {
        z = {gaussian(rng), gaussian(rng)};
    }
    Matrix4c rho{};
    double trace = 0;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            std::complex<double> acc = 0;
            for (int k = 0; k < 4; k++) {
                acc += g[r * 4 + k] * std::conj(g[c * 4 + k]);
            }
            rho[r * 4 + c] = acc;
        }
        trace += rho[r * 4 + r].real();
    }
    for (auto &z : rho) {
        z /= trace;
    }
    return bloch_decompose(rho);
}

BellDiagonalSpec random_bell_diagonal(SplitMix64 &rng, double min_abs) {
    while (true) {
        BellDiagonalSpec s{2 * rng.uniform() - 1, 2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
        if (std::abs(s.e1) >= min_abs && std::abs(s.e2) >= min_abs && std::abs(s.e3) >= min_abs &&
            bell_diagonal_positive(s)) {
            return s;
        }
    }
}

Vec3 conditional_bloch_from_density_matrix(const TwoQubitState &state, const Vec3 &alpha_hat, int alpha) {
    using C = std::complex<double>;
    const double sign = alpha == 0 ? 1.0 : -1.0;
    // P = (1 + sign alpha_hat . sigma) / 2
    const C I{0, 1};
    std::array<C, 4> proj{(1 + sign * alpha_hat.z) / 2.0, sign * (alpha_hat.x - I * alpha_hat.y) / 2.0,
                          sign * (alpha_hat.x + I * alpha_hat.y) / 2.0, (1 - sign * alpha_hat.z) / 2.0};
    Matrix4c rho = reconstruct_density_matrix(state);
    // rho_B[b][b'] = sum_{a, a'} P[a'][a] rho[(a, b), (a', b')]
    std::array<C, 4> bob{};
    for (int b = 0; b < 2; b++) {
        for (int b2 = 0; b2 < 2; b2++) {
            C acc = 0;
            for (int a = 0; a < 2; a++) {
                for (int a2 = 0; a2 < 2; a2++) {
                    acc += proj[a2 * 2 + a] * rho[(2 * a + b) * 4 + (2 * a2 + b2)];
                }
            }
            bob[b * 2 + b2] = acc;
        }
    }
    double p = (bob[0] + bob[3]).real();
    // Tr(rho_B sigma_x) = 2 Re rho01, Tr(rho_B sigma_y) = -2 Im rho01, Tr(rho_B sigma_z) = rho00 - rho11
    return Vec3{2 * bob[1].real(), -2 * bob[1].imag(), (bob[0] - bob[3]).real()} / p;
}

const std::vector<AcceptanceCriterion> &acceptance_criteria() {
    static const std::vector<AcceptanceCriterion> all{
        {1, "exhaustive 2->1 search reaches 2/3", exhaustive_two_bit},
        {2, "Bob-mixed 2->1 search reaches 1/2", exhaustive_bob_mixed},
        {3, "3->1 pruned search certifies 1/2", pruned_three_bit},
        {4, "optimal code table and guess points", optimal_code_table},
        {5, "evaluator matches closed forms", evaluator_matches_formula},
        {6, "Werner family efficiency and discord", werner_family},
        {7, "separable optimizer", separable_optima},
        {8, "concatenation recursion", concatenation},
        {9, "separable vs Werner crossover", crossover},
        {10, "PPT threshold at q = 1/3", ppt_threshold},
        {11, "prepare-and-measure efficiency", prepare_and_measure},
        {12, "sampled concatenated classical search", concatenated_classical},
        {13, "property suite", property_suite},
    };
    return all;
}

std::string criterion_line(const CriterionResult &r) {
    std::string line = fmt::format("[{}] {:>2} {}: computed {} (reference {}, deviation {:.3g}, tolerance {:.3g})",
                                   r.pass ? "PASS" : "FAIL", r.id, r.claim, r.computed, r.reference, r.deviation,
                                   r.tolerance);
    if (!r.detail.empty()) {
        line += " | " + r.detail;
    }
    return line;
}

ReproductionReport reproduce_paper(const ReproduceOptions &options) {
    ReproductionReport rep;
    rep.pass = true;
    for (const auto &c : acceptance_criteria()) {
        CriterionResult r;
        try {
            r = c.run(options);
        } catch (const std::exception &e) {
            r.id = c.id;
            r.claim = c.title;
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        rep.pass = rep.pass && r.pass;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

}  // namespace raclab
