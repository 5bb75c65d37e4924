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

#ifndef RACLAB_QSTATE_H
#define RACLAB_QSTATE_H

#include <array>
#include <complex>

namespace raclab {

/// Tolerances shared by the Bloch-representation routines.
namespace tol {
inline constexpr double kUnitNorm = 1e-12;
inline constexpr double kBlochNorm = 1e-12;
inline constexpr double kPostMeasurementNorm = 1e-10;
inline constexpr double kEigenvalue = 1e-10;
inline constexpr double kTrace = 1e-12;
inline constexpr double kNullEvent = 1e-12;
inline constexpr double kBellPositivity = 4e-12;
}  // namespace tol

struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;

    double operator[](int k) const {
        return k == 0 ? x : (k == 1 ? y : z);
    }
    double &operator[](int k) {
        return k == 0 ? x : (k == 1 ? y : z);
    }

    double dot(const Vec3 &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    double norm() const;
    Vec3 normalized() const;

    Vec3 operator+(const Vec3 &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    Vec3 operator-(const Vec3 &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    Vec3 operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    Vec3 operator/(double s) const {
        return {x / s, y / s, z / s};
    }
    bool operator==(const Vec3 &) const = default;
};

/// Row-major 3x3 real matrix; E[l][m] = Tr(rho sigma_l (x) sigma_m).
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Row-major 4x4 complex matrix on C^2 (x) C^2 with Alice's qubit as the
/// high-order index: entry (2a + b, 2a' + b').
using Matrix4c = std::array<std::complex<double>, 16>;

/// A two-qubit state in Bloch form: local vectors and the correlation matrix.
struct TwoQubitState {
    Vec3 a0;
    Vec3 b0;
    Mat3 E{};

    bool operator==(const TwoQubitState &) const = default;
};

/// Zero local vectors and diagonal correlations (e1, e2, e3).
struct BellDiagonalSpec {
    double e1 = 0;
    double e2 = 0;
    double e3 = 0;

    std::array<double, 3> values() const {
        return {e1, e2, e3};
    }
    TwoQubitState to_state() const;

    bool operator==(const BellDiagonalSpec &) const = default;
};

/// Probability of outcome `alpha` when measuring direction `alpha_hat` on the
/// qubit with Bloch vector `s`. Throws InvalidArgument for a non-unit
/// direction or a non-bit outcome, InvalidState when |s| > 1.
double measure_prob(const Vec3 &s, const Vec3 &alpha_hat, int alpha);

double alice_outcome_prob(const TwoQubitState &state, const Vec3 &alpha_hat, int alpha);

/// Bob's Bloch vector after Alice measures `alpha_hat` and sees `alpha`:
///   (b0 + (-1)^alpha E^T alpha_hat) / (1 + (-1)^alpha alpha_hat . a0).
/// Throws NullEventError when the outcome has probability below 1e-12.
Vec3 post_measurement_bob(const TwoQubitState &state, const Vec3 &alpha_hat, int alpha);

Matrix4c reconstruct_density_matrix(const TwoQubitState &state);

/// Inverse of reconstruct_density_matrix for Hermitian trace-one input:
/// reads off a0, b0 and E from Pauli expectation values.
TwoQubitState bloch_decompose(const Matrix4c &rho);

/// Transpose on Bob's factor.
Matrix4c partial_transpose_bob(const Matrix4c &rho);

/// Eigenvalues of a Hermitian 4x4 matrix in ascending order.
///
/// H = A + iB is embedded as the real symmetric [[A, -B], [B, A]], whose
/// spectrum is that of H with every eigenvalue doubled. The embedding is
/// diagonalized by cyclic Jacobi rotations until the off-diagonal Frobenius
/// norm falls below 1e-13.
std::array<double, 4> hermitian_eigenvalues(const Matrix4c &h);

bool is_valid_state(const TwoQubitState &state);

/// PPT test. Throws InvalidState when the state itself is not valid.
bool is_separable(const TwoQubitState &state);

/// (1-q) 1/4 + q |psi><psi| with |psi> = (|00> + |11>)/sqrt(2), giving
/// E = diag(q, -q, q).
BellDiagonalSpec werner(double q);

/// The four quantities 1 -+ e1 -+ e2 -+ e3 (four times the eigenvalues)
/// are all >= -4e-12.
bool bell_diagonal_positive(const BellDiagonalSpec &spec);

/// |e1| + |e2| + |e3| <= 1, the separable octahedron inside the
/// positivity tetrahedron.
bool bell_diagonal_in_octahedron(const BellDiagonalSpec &spec, double slack = 1e-12);

/// sqrt(1/2 (sum of the two smallest squared correlations)).
double geometric_discord_bell_diagonal(const BellDiagonalSpec &spec);

}  // namespace raclab

#endif
