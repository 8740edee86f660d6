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

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qrabi;

TEST(core, zero_drive_is_diagonal) {
    const Hamiltonian h = build_hamiltonian({0.0, 0.01, 0.5, 1.0});
    EXPECT_EQ(h(0, 0), 0.0);
    EXPECT_EQ(h(1, 1), -0.01);
    EXPECT_DOUBLE_EQ(h(2, 2).real(), 0.48);
    EXPECT_TRUE((h - Hamiltonian(h.diagonal().asDiagonal())).isZero(0.0));
}

TEST(core, drive_entries) {
    const Hamiltonian h = build_hamiltonian({0.02, 0.0, 0.5, 2.0});
    EXPECT_EQ(h(0, 1), 0.01);
    EXPECT_EQ(h(1, 0), 0.01);
    EXPECT_EQ(h(1, 2), 0.02);
    EXPECT_EQ(h(2, 1), 0.02);
    EXPECT_EQ(h(0, 0), 0.0);
    EXPECT_EQ(h(1, 1), 0.0);
    EXPECT_EQ(h(2, 2), 0.5);
}

TEST(core, hermitian_with_forbidden_02_and_fixed_trace) {
    oracle::ParamSampler sample(11);
    for (int i = 0; i < 200; ++i) {
        const ThreeLevelParams p = sample();
        const Hamiltonian h = build_hamiltonian(p);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                EXPECT_EQ(h(r, c), std::conj(h(c, r)));
            }
        }
        EXPECT_EQ(h(0, 2), 0.0);
        EXPECT_EQ(h(2, 0), 0.0);
        EXPECT_NEAR(h.trace().real(), -3.0 * p.delta + p.alpha, 1e-15);
        EXPECT_EQ(h.imag().norm(), 0.0);
    }
}

TEST(core, rejects_degenerate_and_negative) {
    EXPECT_THROW(build_hamiltonian({0.01, 0.0, 0.0, 1.0}), DegenerateParameterError);
    EXPECT_THROW(build_hamiltonian({-0.01, 0.0, 0.5, 1.0}), DomainError);
    EXPECT_THROW(build_hamiltonian({0.01, 0.0, 0.5, -1.0}), DomainError);
    EXPECT_THROW(build_hamiltonian({0.01, std::nan(""), 0.5, 1.0}), DomainError);
}

TEST(core, weak_drive_regime) {
    EXPECT_TRUE(in_weak_drive_regime({0.1, -0.1, 0.5, 1.0}));
    EXPECT_FALSE(in_weak_drive_regime({0.11, 0.0, 0.5, 1.0}));
    EXPECT_FALSE(in_weak_drive_regime({0.0, 0.2, -0.5, 1.0}));
}
