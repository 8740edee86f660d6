// Copyright 2026 The qrabi Authors
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

#include "qrabi/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qrabi {
namespace {

// i2 / (2 i1^{3/2}), clamped into [-1, 1] when the excess is rounding.
double normalized_i2(const CubicInvariants& inv) {
    const double x = inv.i2 / (2.0 * inv.i1 * std::sqrt(inv.i1));
    if (std::abs(x) > 1.0 + 1e-12) {
        throw ConsistencyError("cubic invariants give |i2 / (2 i1^{3/2})| = " +
                               std::to_string(std::abs(x)) + " > 1");
    }
    return std::clamp(x, -1.0, 1.0);
}

}  // namespace

CubicInvariants cubic_invariants(const ThreeLevelParams& p) {
    validate(p);
    const double g2 = p.g * p.g;
    const double k2 = p.k * p.k;
    const double a = p.alpha;
    const double d = p.delta;

    CubicInvariants inv;
    inv.i1 = 0.75 * g2 * (1.0 + k2) + a * a - 3.0 * a * d + 3.0 * d * d;
    inv.i2 = -4.5 * g2 * a + 2.25 * g2 * k2 * a + 2.0 * a * a * a + 6.75 * g2 * d -
             6.75 * g2 * k2 * d - 9.0 * a * a * d + 9.0 * a * d * d;
    if (!(inv.i1 > 0.0)) {
        throw ConsistencyError("cubic invariant i1 must be positive");
    }
    const double i1_cubed = inv.i1 * inv.i1 * inv.i1;
    const std::complex<double> disc(inv.i2 * inv.i2 - 4.0 * i1_cubed, 0.0);
    inv.i0 = -i1_cubed + 0.5 * inv.i2 * inv.i2 + 0.5 * inv.i2 * std::sqrt(disc);
    return inv;
}

std::array<double, 3> shifted_eigenvalues(const ThreeLevelParams& p) {
    const CubicInvariants inv = cubic_invariants(p);
    const double theta = std::acos(normalized_i2(inv)) / 3.0;
    const double amplitude = 2.0 * std::sqrt(inv.i1) / 3.0;
    std::array<double, 3> lambda{};
    for (int r = 0; r < 3; ++r) {
        lambda[r] = amplitude * std::cos(theta - kTwoPi * r / 3.0);
    }
    std::sort(lambda.begin(), lambda.end());
    return lambda;
}

std::array<double, 3> eigenvalue_gaps(const ThreeLevelParams& p) {
    const CubicInvariants inv = cubic_invariants(p);
    const double theta = std::asin(normalized_i2(inv)) / 3.0;
    const double amplitude = 2.0 * std::sqrt(inv.i1 / 3.0);
    constexpr std::array<double, 3> phi = {kPi / 2.0, kPi / 6.0, -kPi / 6.0};
    std::array<double, 3> gaps{};
    for (int i = 0; i < 3; ++i) {
        gaps[i] = amplitude * std::abs(std::sin(phi[i] - theta));
    }
    return gaps;
}

bool in_rabi_branch(const ThreeLevelParams& p) {
    return std::abs(p.alpha - 1.5 * p.delta) > std::hypot(p.delta, p.g);
}

ExactRabi rabi_exact(const ThreeLevelParams& p) {
    const CubicInvariants inv = cubic_invariants(p);
    // |i0| = i1^3 > 0 whenever the discriminant is non-positive, so the
    // division below is safe.
    const std::complex<double> root = std::pow(inv.i0, 1.0 / 3.0);
    const std::complex<double> omega_sq =
        (2.0 / 3.0) * inv.i1 - (root + inv.i1 * inv.i1 / root) / 3.0;

    const double scale = std::max(1.0, inv.i1);
    if (std::abs(omega_sq.imag()) > 1e-9 * scale) {
        throw ConsistencyError("closed-form Rabi root has imaginary part " +
                               std::to_string(omega_sq.imag()));
    }
    double value = omega_sq.real();
    if (value < 0.0) {
        if (value < -1e-12 * scale) {
            throw ConsistencyError("closed-form Rabi root is negative: " + std::to_string(value));
        }
        value = 0.0;
    }
    return {std::sqrt(value), in_rabi_branch(p)};
}

double slope(const ThreeLevelParams& p) {
    validate(p);
    return 1.0 + 0.5 * p.k * p.k * p.delta / p.alpha;
}

double rabi_approx(const ThreeLevelParams& p) {
    const double radicand = p.delta * p.delta + p.g * p.g * slope(p);
    if (radicand < 0.0) {
        throw DomainError("perturbative Rabi frequency has negative radicand " +
                          std::to_string(radicand));
    }
    return std::sqrt(radicand);
}

double stark_shift(const ThreeLevelParams& p) {
    validate(p);
    return 0.25 * p.k * p.k * p.g * p.g / p.alpha;
}

double verify_cubic_identity(const ThreeLevelParams& p, double omega) {
    const CubicInvariants inv = cubic_invariants(p);
    const double lhs = 4.0 * inv.i1 * inv.i1 * inv.i1 - inv.i2 * inv.i2;
    const double w2 = omega * omega;
    const double rhs = 27.0 * w2 * (inv.i1 - w2) * (inv.i1 - w2);
    const double norm = 4.0 * inv.i1 * inv.i1 * inv.i1 + inv.i2 * inv.i2 + 1e-300;
    return std::abs(lhs - rhs) / norm;
}

RabiSolution solve_rabi(const ThreeLevelParams& p) {
    RabiSolution s;
    s.omega_gaps = eigenvalue_gaps(p);
    const ExactRabi exact = rabi_exact(p);
    s.omega_exact = exact.omega;
    s.branch_valid = exact.branch_valid;
    s.omega_approx = rabi_approx(p);
    s.slope = slope(p);
    s.stark = stark_shift(p);
    s.regime_warning = !in_weak_drive_regime(p);
    return s;
}

}  // namespace qrabi
