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

// Closed-form spectrum of the three-level RWA Hamiltonian and the
// perturbative 0-1 Rabi frequency derived from it.

#include <array>
#include <complex>

#include "qrabi/core.hpp"

namespace qrabi {

// Invariants of the characteristic cubic of the trace-free part of H.
//   i1 = (3/4) g^2 (1+k^2) + alpha^2 - 3 alpha delta + 3 delta^2        [GHz^2]
//   i2 = 2 alpha^3 - 9 alpha^2 delta + 9 alpha delta^2
//        + g^2 (-9/2 alpha + 9/4 k^2 alpha + 27/4 delta - 27/4 k^2 delta) [GHz^3]
//   i0 = -i1^3 + i2^2/2 + (i2/2) sqrt(i2^2 - 4 i1^3)                     [GHz^6]
// The square root is taken on the principal complex branch; for a
// Hermitian H the discriminant i2^2 - 4 i1^3 is never positive.
struct CubicInvariants {
    double i1 = 0.0;
    double i2 = 0.0;
    std::complex<double> i0;
};

CubicInvariants cubic_invariants(const ThreeLevelParams& p);

// Eigenvalues of H - tr(H)/3, ascending, from the trigonometric root of the
// depressed cubic: (2/3) sqrt(i1) cos(arccos(i2 / (2 i1^{3/2})) / 3 - 2 pi r / 3).
std::array<double, 3> shifted_eigenvalues(const ThreeLevelParams& p);

// The three pairwise gaps |lambda_i - lambda_j|,
//   2 sqrt(i1/3) |sin(phi_i - arcsin(i2 / (2 i1^{3/2})) / 3)|,
// for phi = {pi/2, pi/6, -pi/6}, in that order. The arcsin argument is
// clamped when it exceeds 1 by rounding only; a larger excess throws
// ConsistencyError.
std::array<double, 3> eigenvalue_gaps(const ThreeLevelParams& p);

// The 0-1 branch is guaranteed by |alpha - 1.5 delta| > sqrt(delta^2 + g^2).
bool in_rabi_branch(const ThreeLevelParams& p);

struct ExactRabi {
    double omega = 0.0;  // GHz
    bool branch_valid = false;
};

// Closed-form root of the cubic in Omega^2,
//   Omega^2 = (2/3) i1 - (1/3) (i0^{1/3} + i1^2 / i0^{1/3}),
// evaluated in complex arithmetic (principal cube root). Outside the 0-1
// branch the value is still returned with branch_valid = false.
ExactRabi rabi_exact(const ThreeLevelParams& p);

// sqrt(delta^2 + g^2 s). Throws DomainError on a negative radicand.
double rabi_approx(const ThreeLevelParams& p);

// s = 1 + (k^2/2)(delta/alpha). g is ignored.
double slope(const ThreeLevelParams& p);

// delta_stark = (k^2/4)(g^2/alpha), GHz; the sign follows alpha.
double stark_shift(const ThreeLevelParams& p);

// Relative residual of 4 i1^3 - i2^2 = 27 Omega^2 (i1 - Omega^2)^2.
double verify_cubic_identity(const ThreeLevelParams& p, double omega);

struct RabiSolution {
    std::array<double, 3> omega_gaps{};
    double omega_exact = 0.0;
    double omega_approx = 0.0;
    double slope = 0.0;
    double stark = 0.0;
    bool branch_valid = false;
    bool regime_warning = false;  // outside the weak-drive regime
};

RabiSolution solve_rabi(const ThreeLevelParams& p);

}  // namespace qrabi
