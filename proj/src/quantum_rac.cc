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

#include "raclab/quantum_rac.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "raclab/bits.h"
#include "raclab/errors.h"

namespace raclab {

namespace {

void require_canonical_n(int n) {
    if (n != 2 && n != 3) {
        throw InvalidArgument("canonical codes exist for n = 2 and n = 3 only, got n = " + std::to_string(n));
    }
}

void require_nondegenerate(int n, const BellDiagonalSpec &spec) {
    auto e = spec.values();
    for (int k = 0; k < n; k++) {
        if (!(std::abs(e[k]) >= kDegeneracyThreshold)) {
            throw DegenerateState("correlation component e" + std::to_string(k + 1) +
                                  " is below the degeneracy threshold");
        }
    }
}

bool is_unit(const Vec3 &v) {
    return std::abs(v.norm() - 1) <= tol::kUnitNorm;
}

}  // namespace

void QuantumRacProtocol::validate() const {
    if (n < 2 || n > 20) {
        throw InvalidArgument("protocol input length must be at least 2");
    }
    if (alice_direction.size() != input_count(n)) {
        throw InvalidArgument("protocol must define Alice's direction for all 2^n inputs");
    }
    if (bob_direction.size() != static_cast<size_t>(n)) {
        throw InvalidArgument("protocol must define Bob's direction for all n indices");
    }
    for (const auto &d : alice_direction) {
        if (!is_unit(d)) {
            throw InvalidArgument("Alice's measurement directions must be unit vectors");
        }
    }
    for (const auto &d : bob_direction) {
        if (!is_unit(d)) {
            throw InvalidArgument("Bob's measurement directions must be unit vectors");
        }
    }
}

QuantumRacProtocol canonical_protocol(int n, const BellDiagonalSpec &spec) {
    require_canonical_n(n);
    require_nondegenerate(n, spec);
    auto e = spec.values();
    QuantumRacProtocol p;
    p.n = n;
    for (uint32_t x = 0; x < input_count(n); x++) {
        Vec3 v;
        for (int k = 0; k < n; k++) {
            v[k] = (input_bit(x, k, n) ? -1.0 : 1.0) / e[k];
        }
        p.alice_direction.push_back(v.normalized());
    }
    for (int k = 0; k < n; k++) {
        Vec3 axis;
        axis[k] = 1;
        p.bob_direction.push_back(axis);
    }
    return p;
}

double success_probability(const QuantumRacProtocol &protocol, const TwoQubitState &state, uint32_t x, int i) {
    const Vec3 &alice = protocol.alice_direction[x];
    const Vec3 &bob = protocol.bob_direction[static_cast<size_t>(i)];
    int xi = input_bit(x, i, protocol.n);
    double total = 0;
    for (int alpha = 0; alpha < 2; alpha++) {
        double p_alpha = alice_outcome_prob(state, alice, alpha);
        if (p_alpha < tol::kNullEvent) {
            continue;
        }
        Vec3 b = post_measurement_bob(state, alice, alpha);
        // Bob is right iff beta = x_i xor alpha.
        double sign = ((xi ^ alpha) == 0) ? 1.0 : -1.0;
        total += p_alpha * (1 + sign * bob.dot(b)) / 2;
    }
    return total;
}

EvaluationResult evaluate(const QuantumRacProtocol &protocol, const TwoQubitState &state) {
    protocol.validate();
    if (!is_valid_state(state)) {
        throw InvalidState("resource is not a valid two-qubit state");
    }
    EvaluationResult r;
    r.n = protocol.n;
    r.p_min = std::numeric_limits<double>::infinity();
    for (uint32_t x = 0; x < input_count(protocol.n); x++) {
        for (int i = 0; i < protocol.n; i++) {
            double p = success_probability(protocol, state, x, i);
            if (p < -1e-12 || p > 1 + 1e-12) {
                throw InvalidState("success probability left [0, 1] beyond rounding");
            }
            p = std::clamp(p, 0.0, 1.0);
            r.success.push_back(p);
            r.p_min = std::min(r.p_min, p);
        }
    }
    return r;
}

double pmin_formula(int n, const BellDiagonalSpec &spec) {
    require_canonical_n(n);
    require_nondegenerate(n, spec);
    auto e = spec.values();
    double inv_sq = 0;
    for (int k = 0; k < n; k++) {
        inv_sq += 1 / (e[k] * e[k]);
    }
    return (1 + 1 / std::sqrt(inv_sq)) / 2;
}

double concatenated_pmin_formula(double discord, int m) {
    if (!(discord >= 0 && discord <= 1) || m < 1) {
        throw InvalidArgument("concatenation needs discord in [0, 1] and m >= 1");
    }
    return (1 + std::pow(discord / std::sqrt(2.0), m)) / 2;
}

double concatenated_pmin_recursive(double base_p, int m) {
    if (!(base_p >= 0.5 && base_p <= 1) || m < 1) {
        throw InvalidArgument("stage success probability must lie in [1/2, 1] and m >= 1");
    }
    double p = base_p;
    for (int k = 2; k <= m; k++) {
        p = p * base_p + (1 - p) * (1 - base_p);
    }
    return p;
}

double prepare_and_measure_pmin(double q) {
    if (!(q >= 0 && q <= 1)) {
        throw InvalidArgument("noise parameter q must lie in [0, 1]");
    }
    const Vec3 axes[2] = {{1, 0, 0}, {0, 1, 0}};
    double worst = 1;
    for (uint32_t x = 0; x < 4; x++) {
        Vec3 psi{input_bit(x, 0, 2) ? -1.0 : 1.0, input_bit(x, 1, 2) ? -1.0 : 1.0, 0};
        Vec3 encoded = psi.normalized() * q;
        for (int i = 0; i < 2; i++) {
            worst = std::min(worst, measure_prob(encoded, axes[i], input_bit(x, i, 2)));
        }
    }
    return worst;
}

}  // namespace raclab
