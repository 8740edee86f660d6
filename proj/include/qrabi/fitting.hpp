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

#pragma once

// Linear-fit analysis of Rabi frequencies: Omega^2 against g^2 at fixed
// detuning (slope s, intercept delta^2), then s against the detuning
// (gradient k^2 / (2 alpha) in ns, intercept 1).

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qrabi/core.hpp"

namespace qrabi {

struct RabiSample {
    double g = 0.0;            // GHz
    double delta = 0.0;        // GHz
    double omega = 0.0;        // GHz
    double sigma_omega = 0.0;  // GHz
};

using RabiDataset = std::vector<RabiSample>;

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double intercept_stderr = 0.0;
    double residual_rms = 0.0;
};

inline constexpr double kMaxNoise = 0.05;

// omega = rabi_exact * (1 + eps), eps ~ Normal(0, noise_rel) drawn from a
// std::mt19937_64 seeded with `seed`; sigma_omega = noise_rel * omega.
RabiDataset synth_dataset(std::span<const ThreeLevelParams> grid, double noise_rel,
                          std::uint64_t seed);

// Cartesian product: every detuning paired with every amplitude.
std::vector<ThreeLevelParams> rabi_grid(double alpha, double k, std::span<const double> deltas,
                                        std::span<const double> amplitudes);

// Weighted least squares for y = slope * x + intercept. With sigma_y empty
// or all zero the fit is unweighted and the standard errors use the residual
// variance; otherwise sigma_y is taken as absolute and must be positive.
// Throws SingularFitError when x has no spread.
FitResult fit_linear(std::span<const double> x, std::span<const double> y,
                     std::span<const double> sigma_y = {});

// Omega^2 against g^2, weighted by sigma(Omega^2) = 2 Omega sigma_omega.
FitResult fit_omega_squared(const RabiDataset& data);

std::map<double, RabiDataset> group_by_detuning(const RabiDataset& data);

struct SlopeAnalysis {
    std::map<double, FitResult> per_detuning;  // stage 1
    FitResult gradient;                        // stage 2: s against delta
};

// Requires at least 3 detunings with at least 3 amplitudes each. Stage 2 is
// weighted by the stage-1 slope errors only when every sample carries a
// measurement uncertainty.
SlopeAnalysis slope_vs_detuning(const std::map<double, RabiDataset>& datasets);

}  // namespace qrabi
