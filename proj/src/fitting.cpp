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

#include "qrabi/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qrabi/analytic.hpp"

namespace qrabi {

RabiDataset synth_dataset(std::span<const ThreeLevelParams> grid, double noise_rel,
                          std::uint64_t seed) {
    if (!(noise_rel >= 0.0 && noise_rel <= kMaxNoise)) {
        throw DomainError("relative noise must lie in [0, 0.05]");
    }
    std::mt19937_64 rng(seed);
    RabiDataset data;
    data.reserve(grid.size());
    for (const ThreeLevelParams& p : grid) {
        const ExactRabi exact = rabi_exact(p);
        if (!exact.branch_valid) {
            throw DomainError("synthetic grid point is outside the 0-1 Rabi branch");
        }
        double omega = exact.omega;
        if (noise_rel > 0.0) {
            std::normal_distribution<double> eps(0.0, noise_rel);
            omega *= 1.0 + eps(rng);
        }
        data.push_back({p.g, p.delta, omega, noise_rel * omega});
    }
    return data;
}

std::vector<ThreeLevelParams> rabi_grid(double alpha, double k, std::span<const double> deltas,
                                        std::span<const double> amplitudes) {
    std::vector<ThreeLevelParams> grid;
    grid.reserve(deltas.size() * amplitudes.size());
    for (double d : deltas) {
        for (double g : amplitudes) {
            grid.push_back({g, d, alpha, k});
        }
    }
    return grid;
}

FitResult fit_linear(std::span<const double> x, std::span<const double> y,
                     std::span<const double> sigma_y) {
    const std::size_t n = x.size();
    if (n < 3) {
        throw DomainError("linear fit needs at least 3 points");
    }
    if (y.size() != n || (!sigma_y.empty() && sigma_y.size() != n)) {
        throw DomainError("linear fit inputs differ in length");
    }
    const bool weighted = std::any_of(sigma_y.begin(), sigma_y.end(), [](double s) { return s != 0.0; });
    if (weighted && !std::all_of(sigma_y.begin(), sigma_y.end(), [](double s) { return s > 0.0; })) {
        throw DomainError("uncertainties must be all positive or all zero");
    }

    std::vector<double> w(n, 1.0);
    if (weighted) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = 1.0 / (sigma_y[i] * sigma_y[i]);
        }
    }
    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sw += w[i];
        swx += w[i] * x[i];
        swy += w[i] * y[i];
    }
    const double xm = swx / sw;
    const double ym = swy / sw;
    double sxx = 0.0, sxy = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - xm;
        sxx += w[i] * dx * dx;
        sxy += w[i] * dx * (y[i] - ym);
        scale += w[i] * x[i] * x[i];
    }
    if (!(sxx > 1e-24 * scale)) {
        throw SingularFitError("abscissae have zero variance; slope is undetermined");
    }

    FitResult r;
    r.slope = sxy / sxx;
    r.intercept = ym - r.slope * xm;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double res = y[i] - r.slope * x[i] - r.intercept;
        rss += res * res;
    }
    r.residual_rms = std::sqrt(rss / static_cast<double>(n));

    // Unweighted: residual variance stands in for the unknown sigma.
    const double variance = weighted ? 1.0 : rss / static_cast<double>(n - 2);
    r.slope_stderr = std::sqrt(variance / sxx);
    r.intercept_stderr = std::sqrt(variance * (1.0 / sw + xm * xm / sxx));
    return r;
}

FitResult fit_omega_squared(const RabiDataset& data) {
    std::vector<double> x, y, sigma;
    x.reserve(data.size());
    y.reserve(data.size());
    sigma.reserve(data.size());
    for (const RabiSample& s : data) {
        x.push_back(s.g * s.g);
        y.push_back(s.omega * s.omega);
        sigma.push_back(2.0 * s.omega * s.sigma_omega);
    }
    return fit_linear(x, y, sigma);
}

std::map<double, RabiDataset> group_by_detuning(const RabiDataset& data) {
    std::map<double, RabiDataset> groups;
    for (const RabiSample& s : data) {
        groups[s.delta].push_back(s);
    }
    return groups;
}

SlopeAnalysis slope_vs_detuning(const std::map<double, RabiDataset>& datasets) {
    if (datasets.size() < 3) {
        throw DomainError("slope analysis needs at least 3 distinct detunings, got " +
                          std::to_string(datasets.size()));
    }
    SlopeAnalysis out;
    bool all_sigma = true;
    std::vector<double> deltas, slopes, errors;
    for (const auto& [delta, data] : datasets) {
        if (data.size() < 3) {
            throw DomainError("each detuning needs at least 3 amplitudes");
        }
        all_sigma = all_sigma && std::all_of(data.begin(), data.end(),
                                             [](const RabiSample& s) { return s.sigma_omega > 0.0; });
        const FitResult f = fit_omega_squared(data);
        out.per_detuning.emplace(delta, f);
        deltas.push_back(delta);
        slopes.push_back(f.slope);
        errors.push_back(f.slope_stderr);
    }
    out.gradient = all_sigma ? fit_linear(deltas, slopes, errors) : fit_linear(deltas, slopes);
    return out;
}

}  // namespace qrabi
