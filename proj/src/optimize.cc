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

#include "raclab/optimize.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <fmt/core.h>

#include "raclab/errors.h"
#include "raclab/parallel.h"
#include "raclab/quantum_rac.h"

namespace raclab {

namespace {

struct HalfSpace {
    std::array<double, 3> a;
    double b;
};

std::vector<HalfSpace> region(Separability separability) {
    std::vector<HalfSpace> h;
    for (int k = 0; k < 3; k++) {
        std::array<double, 3> a{};
        a[k] = 1;
        h.push_back({a, 1});
        a[k] = -1;
        h.push_back({a, 1});
    }
    if (separability == Separability::Required) {
        for (int s = 0; s < 8; s++) {
            h.push_back({{(s & 1) ? -1.0 : 1.0, (s & 2) ? -1.0 : 1.0, (s & 4) ? -1.0 : 1.0}, 1});
        }
    } else {
        // 1 - e1 - e2 - e3 >= 0 and the three sign patterns with two flips.
        h.push_back({{1, 1, 1}, 1});
        h.push_back({{1, -1, -1}, 1});
        h.push_back({{-1, 1, -1}, 1});
        h.push_back({{-1, -1, 1}, 1});
    }
    return h;
}

bool inside(const std::vector<HalfSpace> &h, const std::array<double, 3> &e) {
    for (const auto &c : h) {
        if (c.a[0] * e[0] + c.a[1] * e[1] + c.a[2] * e[2] > c.b + 1e-12) {
            return false;
        }
    }
    return true;
}

// Closed-form worst case, continuous through the degenerate limit 1/2.
double objective(int n, const std::array<double, 3> &e) {
    double inv_sq = 0;
    for (int k = 0; k < n; k++) {
        if (std::abs(e[k]) < kDegeneracyThreshold) {
            return 0.5;
        }
        inv_sq += 1 / (e[k] * e[k]);
    }
    return (1 + 1 / std::sqrt(inv_sq)) / 2;
}

double golden_section_max(const std::function<double(double)> &g, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = g(c);
    double gd = g(d);
    while (b - a > tol) {
        if (gc >= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    return (a + b) / 2;
}

std::array<double, 3> refine(int n, const std::vector<HalfSpace> &h, std::array<double, 3> e, double tol) {
    std::vector<std::array<double, 3>> dirs;
    for (int k = 0; k < 3; k++) {
        std::array<double, 3> d{};
        d[k] = 1;
        dirs.push_back(d);
    }
    const double r = 1 / std::sqrt(2.0);
    for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
            std::array<double, 3> d{};
            d[i] = r;
            d[j] = -r;
            dirs.push_back(d);
            d[j] = r;
            dirs.push_back(d);
        }
    }

    double best = objective(n, e);
    for (int sweep = 0; sweep < 10000; sweep++) {
        double before = best;
        for (const auto &d : dirs) {
            double lo = -std::numeric_limits<double>::infinity();
            double hi = std::numeric_limits<double>::infinity();
            for (const auto &c : h) {
                double ad = c.a[0] * d[0] + c.a[1] * d[1] + c.a[2] * d[2];
                double slack = c.b - (c.a[0] * e[0] + c.a[1] * e[1] + c.a[2] * e[2]);
                if (ad > 1e-15) {
                    hi = std::min(hi, slack / ad);
                } else if (ad < -1e-15) {
                    lo = std::max(lo, slack / ad);
                }
            }
            lo = std::min(lo, 0.0);
            hi = std::max(hi, 0.0);
            auto along = [&](double s) {
                return objective(n, {e[0] + s * d[0], e[1] + s * d[1], e[2] + s * d[2]});
            };
            double s = golden_section_max(along, lo, hi, tol);
            // Endpoints are where optima on the boundary of the region sit.
            for (double cand : {lo, hi}) {
                if (along(cand) > along(s)) {
                    s = cand;
                }
            }
            std::array<double, 3> moved{e[0] + s * d[0], e[1] + s * d[1], e[2] + s * d[2]};
            double value = objective(n, moved);
            if (value > best && inside(h, moved)) {
                best = value;
                e = moved;
            }
        }
        if (best - before <= 1e-15) {
            break;
        }
    }
    return e;
}

// Sorted magnitudes with e1, e2 >= 0 and the sign of e1 e2 e3 kept on e3.
// Unlike full canonicalization this stays inside the positivity tetrahedron.
BellDiagonalSpec canonicalize_signed(const BellDiagonalSpec &spec) {
    BellDiagonalSpec c = canonicalize(spec);
    if (spec.e1 * spec.e2 * spec.e3 < 0) {
        c.e3 = -c.e3;
    }
    return c;
}

}  // namespace

BellDiagonalSpec canonicalize(const BellDiagonalSpec &spec) {
    std::array<double, 3> v{std::abs(spec.e1), std::abs(spec.e2), std::abs(spec.e3)};
    std::sort(v.begin(), v.end(), std::greater<>());
    return {v[0], v[1], v[2]};
}

FamilyOptimum best_separable_bell_diagonal(int n, const StateFamilyConstraint &constraint,
                                           const OptimizerOptions &options) {
    if (n != 2 && n != 3) {
        throw InvalidArgument("family optimization is defined for the 2->1 and 3->1 codes");
    }
    if (!(options.grid_step > 0 && options.grid_step <= 1) || !(options.refine_tol > 0)) {
        throw InvalidArgument("grid step must lie in (0, 1] and refinement tolerance must be positive");
    }
    auto order = options.axis_order;
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2}) {
            throw InvalidArgument("axis order must be a permutation of 0, 1, 2");
        }
    }

    const auto h = region(constraint.separability);
    const int K = static_cast<int>(std::lround(1 / options.grid_step));
    const size_t side = static_cast<size_t>(2 * K + 1);

    struct Slot {
        double value = -1;
        std::array<double, 3> e{};
        uint64_t points = 0;
    };
    std::vector<Slot> slots(side);
    parallel_blocks(side, options.workers, [&](size_t begin, size_t end) {
        for (size_t a = begin; a < end; a++) {
            Slot &slot = slots[a];
            for (size_t b = 0; b < side; b++) {
                for (size_t c = 0; c < side; c++) {
                    std::array<double, 3> e{};
                    const size_t idx[3] = {a, b, c};
                    for (int k = 0; k < 3; k++) {
                        e[order[k]] = std::clamp((static_cast<double>(idx[k]) - K) * options.grid_step, -1.0, 1.0);
                    }
                    if (!inside(h, e)) {
                        continue;
                    }
                    slot.points++;
                    double v = objective(n, e);
                    if (v > slot.value) {
                        slot.value = v;
                        slot.e = e;
                    }
                }
            }
        }
    });

    Slot best;
    uint64_t points = 0;
    for (const auto &s : slots) {
        points += s.points;
        if (s.value > best.value) {
            best = s;
        }
    }

    auto e = refine(n, h, best.e, options.refine_tol);
    FamilyOptimum out;
    out.spec = constraint.separability == Separability::Required ? canonicalize({e[0], e[1], e[2]})
                                                                 : canonicalize_signed({e[0], e[1], e[2]});
    out.p_min = objective(n, {out.spec.e1, out.spec.e2, out.spec.e3});
    out.grid_points = points;
    TwoQubitState state = out.spec.to_state();
    if (constraint.separability == Separability::Required) {
        out.separable = is_separable(state);
        if (!out.separable) {
            throw std::logic_error("optimizer left the separable region");
        }
    } else {
        if (!is_valid_state(state)) {
            throw std::logic_error("optimizer left the set of valid states");
        }
        out.separable = is_separable(state);
    }
    return out;
}

ComparisonRow comparison_row(const std::string &label, const BellDiagonalSpec &state) {
    ComparisonRow row;
    row.label = label;
    row.state = state;
    row.discord = geometric_discord_bell_diagonal(state);
    row.separable = is_separable(state.to_state());
    if (std::abs(state.e1) < kDegeneracyThreshold || std::abs(state.e2) < kDegeneracyThreshold) {
        row.p_min = 0.5;
    } else {
        row.p_min = evaluate(canonical_protocol(2, state), state.to_state()).p_min;
    }
    return row;
}

BellDiagonalSpec separable_two_to_one_optimum() {
    return {0.5, 0.5, 0.0};
}

std::vector<CrossoverPoint> crossover_analysis(const std::vector<double> &q_grid) {
    const ComparisonRow sep = comparison_row("separable-optimum", separable_two_to_one_optimum());
    std::vector<CrossoverPoint> out;
    for (double q : q_grid) {
        CrossoverPoint pt;
        pt.q = q;
        pt.werner = comparison_row(fmt::format("werner q={:.6f}", q), werner(q));
        pt.separable = sep;
        double diff = sep.p_min - pt.werner.p_min;
        pt.tie = std::abs(diff) <= 1e-12;
        pt.separable_wins = diff > 1e-12;
        out.push_back(pt);
    }
    return out;
}

std::vector<ComparisonRow> discord_efficiency_table() {
    std::vector<ComparisonRow> rows{comparison_row("separable-optimum", separable_two_to_one_optimum())};
    for (double q : {0.36, 0.38, 0.40, 0.42, 0.44, 0.45, 0.46, 0.48, 0.49}) {
        rows.push_back(comparison_row(fmt::format("werner q={:.2f}", q), werner(q)));
    }
    return rows;
}

}  // namespace raclab
