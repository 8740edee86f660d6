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

// Three-level rotating-frame model of a weakly driven anharmonic qubit.
//
// Units: every frequency is a linear frequency in GHz and every time is in
// ns, so a state with energy E acquires the phase exp(-i 2 pi E t).

#include <complex>

#include <Eigen/Dense>

#include "qrabi/errors.hpp"

namespace qrabi {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Outside |g/alpha|, |delta/alpha| <= kWeakDriveLimit results are still
// computed but flagged.
inline constexpr double kWeakDriveLimit = 0.2;

struct ThreeLevelParams {
    double g = 0.0;      // drive amplitude, GHz
    double delta = 0.0;  // drive detuning nu_d - nu_01, GHz
    double alpha = 0.0;  // anharmonicity nu_12 - nu_01, GHz
    double k = 0.0;      // matrix-element ratio m_12 / m_01
};

// Throws DegenerateParameterError for alpha == 0 and DomainError for
// negative or non-finite fields.
void validate(const ThreeLevelParams& p);

bool in_weak_drive_regime(const ThreeLevelParams& p);

using Hamiltonian = Eigen::Matrix3cd;

// RWA Hamiltonian in the drive frame, basis {|0>, |1>, |2>}:
//
//   [ 0     g/2     0          ]
//   [ g/2   -delta  k g/2      ]
//   [ 0     k g/2   alpha-2delta ]
//
// The drive phase is fixed to zero, so the matrix is real symmetric.
Hamiltonian build_hamiltonian(const ThreeLevelParams& p);

}  // namespace qrabi
