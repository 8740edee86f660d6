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

#include "qrabi/core.hpp"

#include <cmath>
#include <string>

namespace qrabi {

void validate(const ThreeLevelParams& p) {
    if (!std::isfinite(p.g) || !std::isfinite(p.delta) || !std::isfinite(p.alpha) ||
        !std::isfinite(p.k)) {
        throw DomainError("three-level parameters must be finite");
    }
    if (p.alpha == 0.0) {
        throw DegenerateParameterError("anharmonicity alpha must be nonzero");
    }
    if (p.g < 0.0) {
        throw DomainError("drive amplitude g must be >= 0, got " + std::to_string(p.g));
    }
    if (p.k < 0.0) {
        throw DomainError("matrix-element ratio k must be >= 0, got " + std::to_string(p.k));
    }
}

bool in_weak_drive_regime(const ThreeLevelParams& p) {
    const double a = std::abs(p.alpha);
    return std::abs(p.g) <= kWeakDriveLimit * a && std::abs(p.delta) <= kWeakDriveLimit * a;
}

Hamiltonian build_hamiltonian(const ThreeLevelParams& p) {
    validate(p);
    const double half_g = 0.5 * p.g;
    Hamiltonian h = Hamiltonian::Zero();
    h(0, 1) = h(1, 0) = half_g;
    h(1, 1) = -p.delta;
    h(1, 2) = h(2, 1) = p.k * half_g;
    h(2, 2) = p.alpha - 2.0 * p.delta;
    return h;
}

}  // namespace qrabi
