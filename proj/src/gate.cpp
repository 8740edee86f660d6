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

#include "qrabi/gate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qrabi/analytic.hpp"
#include "qrabi/dynamics.hpp"

namespace qrabi {

GateConfig gate_config(double delta, double alpha, double k) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw DomainError("gate detuning must be positive, got " + std::to_string(delta));
    }
    validate(ThreeLevelParams{0.0, 0.0, alpha, k});

    GateConfig c;
    c.delta = delta;
    c.alpha = alpha;
    c.k = k;
    c.g = std::sqrt(5.0 / 3.0) * delta;
    c.tau = std::sqrt(3.0 / 8.0) / delta;
    c.detunings = {delta, -delta, -delta, -3.0 * delta};
    return c;
}

double wrap_phase(double angle) {
    double r = std::remainder(angle, kTwoPi);  // [-pi, pi]
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

namespace {

double rabi_frequency(const ThreeLevelParams& p, Correction correction) {
    switch (correction) {
        case Correction::none:
            return std::hypot(p.delta, p.g);
        case Correction::approx:
            return rabi_approx(p);
        case Correction::exact: {
            const ExactRabi r = rabi_exact(p);
            if (!r.branch_valid) {
                throw DomainError("gate drive is outside the 0-1 Rabi branch");
            }
            return r.omega;
        }
    }
    throw DomainError("unknown correction mode");
}

}  // namespace

GateErrorReport evaluate_gate(const GateConfig& config, Correction correction) {
    GateErrorReport report;
    double leakage_sum = 0.0;
    for (std::size_t s = 0; s < 4; ++s) {
        const ThreeLevelParams p{config.g, config.detunings[s], config.alpha, config.k};
        StateOutcome& out = report.per_state[s];
        out.state = kComputationalStates[s];
        out.detuning = p.delta;
        out.rabi = rabi_frequency(p, correction);
        const std::complex<double> a0 = two_level_amplitude(p.delta, out.rabi, config.tau);
        out.ground_population = std::norm(a0);
        out.phase = std::arg(a0);

        const double leakage = std::max(0.0, 1.0 - out.ground_population);
        leakage_sum += leakage;
        report.leakage_max = std::max(report.leakage_max, leakage);
    }
    report.leakage_avg = leakage_sum / 4.0;
    const auto& ps = report.per_state;
    report.conditional_phase = wrap_phase(ps[3].phase - ps[2].phase - ps[1].phase + ps[0].phase);
    report.phase_error = std::abs(wrap_phase(report.conditional_phase - kPi));
    return report;
}

std::vector<SweepPoint> sweep_anharmonicity(double delta, double k, std::span<const double> alphas,
                                            Correction correction) {
    std::vector<SweepPoint> points;
    points.reserve(alphas.size());
    for (double alpha : alphas) {
        const GateErrorReport r = evaluate_gate(gate_config(delta, alpha, k), correction);
        points.push_back({alpha, r.leakage_avg, r.leakage_max, r.phase_error});
    }
    return points;
}

}  // namespace qrabi
