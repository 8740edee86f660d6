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

// Fluxonium spectrum on a uniform phase grid:
//
//   H/h = 4 E_C n^2 + (E_L/2) phi^2 - E_J cos(phi - 2 pi flux),
//
// with n = -i d/dphi discretized by 8th-order central differences and a
// wavefunction that vanishes at +-phi_max.

#include <vector>

#include <Eigen/Dense>

#include "qrabi/errors.hpp"

namespace qrabi {

struct FluxoniumParams {
    double ec = 0.0;    // E_C / h, GHz
    double el = 0.0;    // E_L / h, GHz
    double ej = 0.0;    // E_J / h, GHz
    double flux = 0.0;  // Phi_e / Phi_0, taken modulo 1
};

// Device parameters extracted from two-tone spectroscopy.
inline constexpr FluxoniumParams kFluxoniumA{0.49, 1.74, 3.56, 0.5};
inline constexpr FluxoniumParams kFluxoniumB{0.5, 2.11, 4.29, 0.0};

struct SolverGrid {
    double phi_max = 6.0 * 3.14159265358979323846;  // half-width, rad
    int n_points = 2001;                            // odd, >= 501
};

inline constexpr int kDefaultLevels = 6;

struct FluxoniumSpectrum {
    std::vector<double> levels;  // ascending, GHz
    double nu01 = 0.0;
    double nu12 = 0.0;
    double alpha = 0.0;           // nu12 - nu01
    Eigen::MatrixXd n_elems;      // |<i|n|j>|
    Eigen::MatrixXd phi_elems;    // |<i|phi|j>|
    double tail_mass = 0.0;       // worst-case probability in the outer 10% of the box
    double convergence_shift = 0.0;  // |nu01 change when the spacing is halved|, GHz
    bool converged = false;          // convergence_shift < 1e-6 GHz
};

enum class DriveChannel { charge, flux };

void validate(const FluxoniumParams& p);
void validate(const SolverGrid& grid);

// Lowest n_levels eigenpairs and their matrix elements. The grid is refined
// once (spacing halved) to measure convergence of nu01. Throws
// ResolutionError if the refinement moves nu01 by more than 1e-4 GHz and
// BoxTooSmallError if any returned level has tail mass above 1e-8.
FluxoniumSpectrum solve_spectrum(const FluxoniumParams& p, const SolverGrid& grid = {},
                                 int n_levels = kDefaultLevels);

// k = |m_12| / |m_01| for the charge (n) or flux (phi) matrix.
double drive_ratio(const FluxoniumSpectrum& s, DriveChannel channel);

// |(n12/n01) / ((nu12/nu01)(phi12/phi01)) - 1|. Because [H, phi] = -8i E_C n,
// |n_ij| = |nu_ij| |phi_ij| / (8 E_C) holds exactly, so the deviation only
// measures discretization error.
double conjugate_ratio_check(const FluxoniumSpectrum& s);

}  // namespace qrabi
