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

// Coherent-error model of a microwave-activated CZ gate driven on a coupler.
//
// The coupler 0-1 line splits with the computational state mn. The drive
// sits midway between the 00 and 10 lines, which gives the detunings
// {00: +D, 01: -D, 10: -D, 11: -3D}. With g = sqrt(5/3) D and
// tau = sqrt(3/8) / D (linear units) the two-level rotations close exactly:
// 2 pi on 00, 01, 10 and 4 pi on 11, i.e. an ideal CZ. Coupling to the
// coupler's second level perturbs the Rabi frequencies and spoils the
// closure; evaluate_gate measures by how much.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "qrabi/core.hpp"

namespace qrabi {

enum class Correction {
    none,    // two-level sqrt(delta^2 + g^2)
    approx,  // rabi_approx
    exact,   // rabi_exact
};

inline constexpr std::array<std::string_view, 4> kComputationalStates = {"00", "01", "10", "11"};

struct GateConfig {
    double delta = 0.0;  // GHz, > 0
    double alpha = 0.0;  // coupler anharmonicity, GHz
    double k = 0.0;
    double g = 0.0;      // sqrt(5/3) delta
    double tau = 0.0;    // ns
    std::array<double, 4> detunings{};  // indexed like kComputationalStates
};

GateConfig gate_config(double delta, double alpha, double k);

struct StateOutcome {
    std::string_view state;
    double detuning = 0.0;           // GHz
    double rabi = 0.0;               // GHz
    double ground_population = 0.0;  // |a0|^2
    double phase = 0.0;              // arg(a0), rad
};

struct GateErrorReport {
    std::array<StateOutcome, 4> per_state{};
    double leakage_avg = 0.0;
    double leakage_max = 0.0;
    double conditional_phase = 0.0;  // wrapped into (-pi, pi]
    double phase_error = 0.0;        // |wrap(conditional_phase - pi)|
};

// Maps an angle into (-pi, pi].
double wrap_phase(double angle);

GateErrorReport evaluate_gate(const GateConfig& config, Correction correction);

struct SweepPoint {
    double alpha = 0.0;
    double leakage_avg = 0.0;
    double leakage_max = 0.0;
    double phase_error = 0.0;
};

std::vector<SweepPoint> sweep_anharmonicity(double delta, double k, std::span<const double> alphas,
                                            Correction correction);

}  // namespace qrabi
