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
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qrabi;

namespace {

// Gate working point: g = sqrt(5/3) * 14 MHz rounded, single-excitation detuning.
constexpr ThreeLevelParams kGatePoint{0.018074, -0.014, -0.55, 1.29};

std::array<double, 3> sorted(std::array<double, 3> v) {
    std::sort(v.begin(), v.end());
    return v;
}

double tolerance(const ThreeLevelParams& p) { return 1e-9 * std::max(1.0, std::abs(p.alpha)); }

}  // namespace

TEST(analytic, invariants_pure_anharmonic) {
    const CubicInvariants inv = cubic_invariants({0.0, 0.0, 1.0, 0.0});
    EXPECT_DOUBLE_EQ(inv.i1, 1.0);
    EXPECT_DOUBLE_EQ(inv.i2, 2.0);
}

TEST(analytic, invariants_regression) {
    // 40-digit evaluation of the closed forms.
    const CubicInvariants inv = cubic_invariants(kGatePoint);
    EXPECT_NEAR(inv.i1, 0.2806407101132587, 1e-15);
    EXPECT_NEAR(inv.i2, -0.29544891031392026, 1e-15);
    EXPECT_NEAR(std::abs(inv.i0), std::pow(inv.i1, 3), 1e-14);
}

TEST(analytic, cubic_identity_holds_for_oracle_gaps) {
    oracle::ParamSampler sample(21);
    for (int i = 0; i < 300; ++i) {
        const ThreeLevelParams p = sample();
        for (double gap : oracle::gaps(p)) {
            EXPECT_LT(verify_cubic_identity(p, gap), 1e-8);
        }
    }
}

TEST(analytic, cubic_identity_degenerate_and_negative_control) {
    EXPECT_EQ(verify_cubic_identity({0.0, 0.0, 1.0, 0.0}, 0.0), 0.0);
    EXPECT_EQ(verify_cubic_identity({0.0, 0.0, 0.5, 2.0}, 0.0), 0.0);
    oracle::ParamSampler sample(22);
    for (int i = 0; i < 100; ++i) {
        const ThreeLevelParams p = sample();
        EXPECT_GT(verify_cubic_identity(p, 1.5 * oracle::gaps(p)[2]), 1e-3);
    }
}

TEST(analytic, gaps_diagonal_case) {
    const auto g = sorted(eigenvalue_gaps({0.0, 0.0, 1.0, 0.0}));
    EXPECT_NEAR(g[0], 0.0, 1e-12);
    EXPECT_NEAR(g[1], 1.0, 1e-12);
    EXPECT_NEAR(g[2], 1.0, 1e-12);
}

TEST(analytic, gaps_match_eigensolver) {
    const ThreeLevelParams p{0.02, 0.0, 0.5, 1.41};
    const auto g = sorted(eigenvalue_gaps(p));
    const auto ref = oracle::gaps(p);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(g[i], ref[i], 1e-12);
    }
    // mpmath: 0.019996006076186788, 0.49059819131994488, 0.51059419739613166
    EXPECT_NEAR(g[0], 0.019996006076186788, 1e-13);
    EXPECT_NEAR(g[1], 0.49059819131994488, 1e-13);
    EXPECT_NEAR(g[2], 0.51059419739613166, 1e-13);
}

TEST(analytic, gaps_gate_point) {
    const auto g = sorted(eigenvalue_gaps(kGatePoint));
    EXPECT_NEAR(g[0], 0.023014631878079252, 1e-13);
    EXPECT_NEAR(g[1], 0.51787293978731071, 1e-13);
    EXPECT_NEAR(g[2], 0.54088757166538996, 1e-13);
}

TEST(analytic, gaps_property_random) {
    oracle::ParamSampler sample(23);
    for (int i = 0; i < 1000; ++i) {
        const ThreeLevelParams p = sample();
        const auto g = eigenvalue_gaps(p);
        const auto s = sorted(g);
        const auto ref = oracle::gaps(p);
        for (int j = 0; j < 3; ++j) {
            ASSERT_NEAR(s[j], ref[j], tolerance(p)) << "alpha=" << p.alpha << " g=" << p.g;
            ASSERT_GE(g[j], 0.0);
        }
        ASSERT_NEAR(s[2], s[0] + s[1], tolerance(p));
    }
}

TEST(analytic, shifted_eigenvalues_match_eigensolver) {
    oracle::ParamSampler sample(24);
    for (int i = 0; i < 500; ++i) {
        const ThreeLevelParams p = sample();
        const auto lambda = shifted_eigenvalues(p);
        const auto ref = oracle::diagonalize(p).energies;
        const double mean = (ref[0] + ref[1] + ref[2]) / 3.0;
        for (int j = 0; j < 3; ++j) {
            ASSERT_NEAR(lambda[j], ref[j] - mean, tolerance(p));
        }
    }
}

TEST(analytic, rabi_exact_trivial_cases) {
    const ExactRabi undriven = rabi_exact({0.0, 0.01, 0.5, 1.0});
    EXPECT_NEAR(undriven.omega, 0.01, 1e-12);
    EXPECT_TRUE(undriven.branch_valid);
    const ExactRabi two_level = rabi_exact({0.01, 0.0, 0.5, 0.0});
    EXPECT_NEAR(two_level.omega, 0.01, 1e-12);
}

TEST(analytic, rabi_exact_gate_point) {
    const ExactRabi r = rabi_exact(kGatePoint);
    EXPECT_TRUE(r.branch_valid);
    EXPECT_NEAR(r.omega, 0.023014631878079252, 1e-12);
}

TEST(analytic, rabi_exact_tracks_01_branch) {
    oracle::ParamSampler sample(25);
    for (int i = 0; i < 1000; ++i) {
        const ThreeLevelParams p = sample();
        const ExactRabi r = rabi_exact(p);
        ASSERT_TRUE(r.branch_valid);
        ASSERT_NEAR(r.omega, oracle::rabi_01(p), tolerance(p));
        const auto g = eigenvalue_gaps(p);
        const double closest = std::min({std::abs(g[0] - r.omega), std::abs(g[1] - r.omega),
                                         std::abs(g[2] - r.omega)});
        ASSERT_LT(closest, tolerance(p));
    }
}

TEST(analytic, branch_condition) {
    EXPECT_TRUE(in_rabi_branch({0.01, 0.01, 0.5, 1.0}));
    EXPECT_FALSE(in_rabi_branch({0.4, 0.3, 0.5, 1.0}));
    // Flagged but still computed.
    const ExactRabi r = rabi_exact({0.4, 0.3, 0.5, 1.0});
    EXPECT_FALSE(r.branch_valid);
    EXPECT_TRUE(std::isfinite(r.omega));
}

TEST(analytic, rabi_approx_values) {
    EXPECT_DOUBLE_EQ(rabi_approx({0.02, 0.0, -0.3, 2.0}), 0.02);
    EXPECT_DOUBLE_EQ(rabi_approx({0.02, 0.0, 1.7, 0.4}), 0.02);
    EXPECT_DOUBLE_EQ(rabi_approx({0.0, 0.014, 0.5, 1.0}), 0.014);
    EXPECT_NEAR(rabi_approx(kGatePoint), 0.023012782476665647, 1e-15);
    EXPECT_THROW(rabi_approx({1.0, -0.2, 0.01, 3.0}), DomainError);
}

TEST(analytic, approximation_error_bound) {
    oracle::ParamSampler sample(26, 0.05);
    for (int i = 0; i < 1000; ++i) {
        const ThreeLevelParams p = sample();
        const double exact = rabi_exact(p).omega;
        const double approx = rabi_approx(p);
        const double bound =
            10.0 * p.g * p.g * (p.g * p.g + p.k * p.k * p.delta * p.delta) / (p.alpha * p.alpha);
        ASSERT_LE(std::abs(exact * exact - approx * approx), bound + 1e-17);
    }
}

TEST(analytic, matches_perturbation_series) {
    // Remainder after the fifth-order series is sixth order in (g, delta).
    oracle::ParamSampler sample(27, 0.02);
    for (int i = 0; i < 500; ++i) {
        const ThreeLevelParams p = sample();
        const double w = rabi_exact(p).omega;
        const double eps = std::max(p.g, std::abs(p.delta));
        const double scale = std::pow(eps, 6) / std::pow(p.alpha, 4) * 50.0 * (1 + std::pow(p.k, 6));
        // Closed form loses absolute precision of order eps_machine * I1.
        const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * p.alpha * p.alpha;
        ASSERT_NEAR(w * w, oracle::omega_sq_series(p), scale + rounding);
    }
}

TEST(analytic, slope_and_stark) {
    EXPECT_EQ(slope({0.01, 0.0, 0.5, 2.0}), 1.0);
    // d s / d delta = k^2 / (2 alpha), in ns for GHz inputs.
    const double ds_a = (slope({0.0, 0.001, 1.335, 2.44}) - 1.0) / 0.001;
    const double ds_b = (slope({0.0, 0.001, -0.403, 1.35}) - 1.0) / 0.001;
    EXPECT_NEAR(ds_a, 2.23, 0.005);
    EXPECT_NEAR(ds_b, -2.26, 0.005);

    EXPECT_EQ(stark_shift({0.0, 0.01, 0.5, 1.0}), 0.0);
    EXPECT_EQ(stark_shift({0.02, 0.01, 0.5, 0.0}), 0.0);
    EXPECT_NEAR(stark_shift(kGatePoint), -0.00024709576136890909, 1e-18);
}

TEST(analytic, slope_is_stark_shift_over_detuning) {
    oracle::ParamSampler sample(28);
    for (int i = 0; i < 200; ++i) {
        const ThreeLevelParams p = sample();
        const double lhs = (slope(p) - 1.0) * p.g * p.g;
        // slope - 1 cancels to one ulp of the unit slope.
        const double ulp = 4.0 * std::numeric_limits<double>::epsilon() * p.g * p.g;
        EXPECT_NEAR(lhs, 2.0 * p.delta * stark_shift(p), ulp);
    }
}

TEST(analytic, zero_drive_slope_by_finite_difference) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double alpha = (u(rng) < 0.5 ? -1 : 1) * (0.2 + 1.8 * u(rng));
        const double delta = alpha * 0.05 * (2 * u(rng) - 1);
        const double k = 3 * u(rng);
        const double h = 1e-4 * std::abs(alpha);
        const ThreeLevelParams p{h, delta, alpha, k};
        const double w = rabi_exact(p).omega;
        const double fd = (w * w - delta * delta) / (h * h);
        const double exact_coeff = 1.0 + 0.5 * k * k * delta / (alpha - delta);
        EXPECT_NEAR(fd, exact_coeff, 1e-6);
        // The first-order slope misses (k^2/2) delta^2 / (alpha (alpha - delta)).
        EXPECT_NEAR(fd - slope(p), 0.5 * k * k * delta * delta / (alpha * (alpha - delta)), 1e-6);
    }
}

TEST(analytic, solve_rabi_bundle) {
    const RabiSolution s = solve_rabi(kGatePoint);
    EXPECT_FALSE(s.regime_warning);
    EXPECT_TRUE(s.branch_valid);
    EXPECT_EQ(s.omega_exact, rabi_exact(kGatePoint).omega);
    EXPECT_EQ(s.omega_approx, rabi_approx(kGatePoint));
    EXPECT_TRUE(solve_rabi({0.3, 0.0, 1.0, 1.0}).regime_warning);
    EXPECT_THROW(solve_rabi({0.1, 0.0, 0.0, 1.0}), DegenerateParameterError);
}
