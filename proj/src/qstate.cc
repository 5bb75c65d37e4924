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

#include "raclab/qstate.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "raclab/errors.h"

namespace raclab {

namespace {

using Complex = std::complex<double>;
using Pauli = std::array<Complex, 4>;

constexpr Complex kI{0, 1};

// sigma_0 = identity, then sigma_x, sigma_y, sigma_z (row-major 2x2).
const std::array<Pauli, 4> kPauli{{
    {1, 0, 0, 1},
    {0, 1, 1, 0},
    {0, -kI, kI, 0},
    {1, 0, 0, -1},
}};

double sign_of(int alpha) {
    if (alpha != 0 && alpha != 1) {
        throw InvalidArgument("measurement outcome must be 0 or 1, got " + std::to_string(alpha));
    }
    return alpha == 0 ? 1.0 : -1.0;
}

void require_unit(const Vec3 &d) {
    if (!std::isfinite(d.norm()) || std::abs(d.norm() - 1) > tol::kUnitNorm) {
        throw InvalidArgument("measurement direction must have unit norm");
    }
}

double clamp01(double p) {
    return std::clamp(p, 0.0, 1.0);
}

// sigma_l (x) sigma_m with l, m in 0..3.
Complex pauli_product_entry(int l, int m, int row, int col) {
    return kPauli[l][(row >> 1) * 2 + (col >> 1)] * kPauli[m][(row & 1) * 2 + (col & 1)];
}

}  // namespace

double Vec3::norm() const {
    return std::sqrt(dot(*this));
}

Vec3 Vec3::normalized() const {
    return *this / norm();
}

TwoQubitState BellDiagonalSpec::to_state() const {
    TwoQubitState s;
    s.E[0][0] = e1;
    s.E[1][1] = e2;
    s.E[2][2] = e3;
    return s;
}

double measure_prob(const Vec3 &s, const Vec3 &alpha_hat, int alpha) {
    double sign = sign_of(alpha);
    require_unit(alpha_hat);
    if (!(s.norm() <= 1 + tol::kBlochNorm)) {
        throw InvalidState("Bloch vector has norm greater than one");
    }
    return clamp01((1 + sign * alpha_hat.dot(s)) / 2);
}

double alice_outcome_prob(const TwoQubitState &state, const Vec3 &alpha_hat, int alpha) {
    double sign = sign_of(alpha);
    require_unit(alpha_hat);
    return clamp01((1 + sign * alpha_hat.dot(state.a0)) / 2);
}

Vec3 post_measurement_bob(const TwoQubitState &state, const Vec3 &alpha_hat, int alpha) {
    double sign = sign_of(alpha);
    require_unit(alpha_hat);
    double denom = 1 + sign * alpha_hat.dot(state.a0);
    if (denom / 2 < tol::kNullEvent) {
        throw NullEventError("cannot condition on a measurement outcome of zero probability");
    }
    Vec3 et_alpha;
    for (int m = 0; m < 3; m++) {
        for (int l = 0; l < 3; l++) {
            et_alpha[m] += state.E[l][m] * alpha_hat[l];
        }
    }
    return (state.b0 + et_alpha * sign) / denom;
}

Matrix4c reconstruct_density_matrix(const TwoQubitState &state) {
    std::array<std::array<double, 4>, 4> coeff{};
    coeff[0][0] = 1;
    for (int k = 0; k < 3; k++) {
        coeff[k + 1][0] = state.a0[k];
        coeff[0][k + 1] = state.b0[k];
        for (int m = 0; m < 3; m++) {
            coeff[k + 1][m + 1] = state.E[k][m];
        }
    }
    Matrix4c rho{};
    for (int row = 0; row < 4; row++) {
        for (int col = 0; col < 4; col++) {
            Complex acc = 0;
            for (int l = 0; l < 4; l++) {
                for (int m = 0; m < 4; m++) {
                    if (coeff[l][m] != 0) {
                        acc += coeff[l][m] * pauli_product_entry(l, m, row, col);
                    }
                }
            }
            rho[row * 4 + col] = acc / 4.0;
        }
    }
    return rho;
}

TwoQubitState bloch_decompose(const Matrix4c &rho) {
    auto expectation = [&](int l, int m) {
        // Tr(rho P) = sum_{r,c} rho[r][c] P[c][r]
        Complex acc = 0;
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                acc += rho[r * 4 + c] * pauli_product_entry(l, m, c, r);
            }
        }
        return acc.real();
    };
    TwoQubitState s;
    for (int k = 0; k < 3; k++) {
        s.a0[k] = expectation(k + 1, 0);
        s.b0[k] = expectation(0, k + 1);
        for (int m = 0; m < 3; m++) {
            s.E[k][m] = expectation(k + 1, m + 1);
        }
    }
    return s;
}

Matrix4c partial_transpose_bob(const Matrix4c &rho) {
    Matrix4c out{};
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            for (int a2 = 0; a2 < 2; a2++) {
                for (int b2 = 0; b2 < 2; b2++) {
                    out[(2 * a + b) * 4 + (2 * a2 + b2)] = rho[(2 * a + b2) * 4 + (2 * a2 + b)];
                }
            }
        }
    }
    return out;
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4c &h) {
    constexpr int N = 8;
    std::array<std::array<double, N>, N> a{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            double re = h[r * 4 + c].real();
            double im = h[r * 4 + c].imag();
            a[r][c] = re;
            a[r + 4][c + 4] = re;
            a[r][c + 4] = -im;
            a[r + 4][c] = im;
        }
    }
    // Symmetrize to absorb any rounding asymmetry in the input.
    for (int r = 0; r < N; r++) {
        for (int c = r + 1; c < N; c++) {
            double avg = (a[r][c] + a[c][r]) / 2;
            a[r][c] = avg;
            a[c][r] = avg;
        }
    }

    auto off_norm = [&] {
        double s = 0;
        for (int r = 0; r < N; r++) {
            for (int c = 0; c < N; c++) {
                if (r != c) {
                    s += a[r][c] * a[r][c];
                }
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() >= 1e-13; sweep++) {
        for (int p = 0; p < N - 1; p++) {
            for (int q = p + 1; q < N; q++) {
                double apq = a[p][q];
                if (apq == 0) {
                    continue;
                }
                double theta = (a[q][q] - a[p][p]) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < N; k++) {
                    double akp = a[k][p];
                    double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < N; k++) {
                    double apk = a[p][k];
                    double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::array<double, N> diag{};
    for (int k = 0; k < N; k++) {
        diag[k] = a[k][k];
    }
    std::sort(diag.begin(), diag.end());
    return {(diag[0] + diag[1]) / 2, (diag[2] + diag[3]) / 2, (diag[4] + diag[5]) / 2, (diag[6] + diag[7]) / 2};
}

bool is_valid_state(const TwoQubitState &state) {
    Matrix4c rho = reconstruct_density_matrix(state);
    Complex trace = rho[0] + rho[5] + rho[10] + rho[15];
    if (std::abs(trace - 1.0) > tol::kTrace) {
        return false;
    }
    return hermitian_eigenvalues(rho)[0] >= -tol::kEigenvalue;
}

bool is_separable(const TwoQubitState &state) {
    if (!is_valid_state(state)) {
        throw InvalidState("separability is only defined for valid states");
    }
    Matrix4c pt = partial_transpose_bob(reconstruct_density_matrix(state));
    return hermitian_eigenvalues(pt)[0] >= -tol::kEigenvalue;
}

BellDiagonalSpec werner(double q) {
    if (!(q >= 0 && q <= 1)) {
        throw InvalidArgument("Werner mixing parameter must lie in [0, 1]");
    }
    return {q, -q, q};
}

bool bell_diagonal_positive(const BellDiagonalSpec &spec) {
    const auto [e1, e2, e3] = spec.values();
    return 1 - e1 - e2 - e3 >= -tol::kBellPositivity && 1 - e1 + e2 + e3 >= -tol::kBellPositivity &&
           1 + e1 - e2 + e3 >= -tol::kBellPositivity && 1 + e1 + e2 - e3 >= -tol::kBellPositivity;
}

bool bell_diagonal_in_octahedron(const BellDiagonalSpec &spec, double slack) {
    return std::abs(spec.e1) + std::abs(spec.e2) + std::abs(spec.e3) <= 1 + slack;
}

double geometric_discord_bell_diagonal(const BellDiagonalSpec &spec) {
    if (!bell_diagonal_positive(spec)) {
        throw InvalidState("Bell-diagonal correlations lie outside the positivity tetrahedron");
    }
    std::array<double, 3> sq{spec.e1 * spec.e1, spec.e2 * spec.e2, spec.e3 * spec.e3};
    std::sort(sq.begin(), sq.end());
    return std::sqrt((sq[0] + sq[1]) / 2);
}

}  // namespace raclab
