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

#include "raclab/vertex_lp.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "raclab/errors.h"

namespace raclab {

namespace {

constexpr double kDetThreshold = 1e-12;
constexpr double kFeasibility = 1e-12;
constexpr double kTie = 1e-12;

double dot(const LpVector &a, const LpVector &b) {
    double s = 0;
    for (int k = 0; k < kLpDim; k++) {
        s += a[k] * b[k];
    }
    return s;
}

// Visits every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F &&visit) {
    if (k > m) {
        return;
    }
    std::vector<int> idx(static_cast<size_t>(k));
    for (int j = 0; j < k; j++) {
        idx[j] = j;
    }
    while (true) {
        visit(idx);
        int j = k - 1;
        while (j >= 0 && idx[j] == m - k + j) {
            j--;
        }
        if (j < 0) {
            return;
        }
        idx[j]++;
        for (int t = j + 1; t < k; t++) {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

}  // namespace

std::optional<LpVector> solve_square(std::array<LpVector, kLpDim> rows, LpVector rhs) {
    double det = 1;
    for (int col = 0; col < kLpDim; col++) {
        int pivot = col;
        for (int r = col + 1; r < kLpDim; r++) {
            if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) {
                pivot = r;
            }
        }
        if (rows[pivot][col] == 0) {
            return std::nullopt;
        }
        if (pivot != col) {
            std::swap(rows[pivot], rows[col]);
            std::swap(rhs[pivot], rhs[col]);
            det = -det;
        }
        det *= rows[col][col];
        for (int r = col + 1; r < kLpDim; r++) {
            double f = rows[r][col] / rows[col][col];
            if (f == 0) {
                continue;
            }
            for (int c = col; c < kLpDim; c++) {
                rows[r][c] -= f * rows[col][c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    if (std::abs(det) < kDetThreshold) {
        return std::nullopt;
    }
    LpVector z{};
    for (int r = kLpDim - 1; r >= 0; r--) {
        double s = rhs[r];
        for (int c = r + 1; c < kLpDim; c++) {
            s -= rows[r][c] * z[c];
        }
        z[r] = s / rows[r][r];
    }
    return z;
}

std::optional<LpSolution> maximize_by_vertex_enumeration(const LpVector &objective,
                                                         const std::vector<LpConstraint> &equalities,
                                                         const std::vector<LpConstraint> &inequalities) {
    int n_eq = static_cast<int>(equalities.size());
    if (n_eq > kLpDim) {
        throw InvalidArgument("more equalities than variables");
    }
    int m = static_cast<int>(inequalities.size());
    int k = kLpDim - n_eq;

    std::optional<LpSolution> best;
    std::array<LpVector, kLpDim> rows{};
    LpVector rhs{};
    for (int e = 0; e < n_eq; e++) {
        rows[e] = equalities[e].a;
        rhs[e] = equalities[e].b;
    }

    for_each_subset(m, k, [&](const std::vector<int> &subset) {
        for (int j = 0; j < k; j++) {
            rows[n_eq + j] = inequalities[subset[j]].a;
            rhs[n_eq + j] = inequalities[subset[j]].b;
        }
        auto z = solve_square(rows, rhs);
        if (!z) {
            return;
        }
        for (const auto &c : inequalities) {
            if (dot(c.a, *z) > c.b + kFeasibility) {
                return;
            }
        }
        double value = dot(objective, *z);
        bool take = !best || value > best->value + kTie ||
                    (value >= best->value - kTie &&
                     std::lexicographical_compare(z->begin(), z->end(), best->z.begin(), best->z.end()));
        if (take) {
            best = LpSolution{*z, value, {}};
        }
    });

    if (best) {
        best->value = dot(objective, best->z);
        for (int j = 0; j < m; j++) {
            if (std::abs(dot(inequalities[j].a, best->z) - inequalities[j].b) <= kFeasibility) {
                best->active.push_back(j);
            }
        }
    }
    return best;
}

}  // namespace raclab
