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

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrabi/fitting.hpp"

namespace qrabi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr const char* kSweepHeader =
    "g_ghz,delta_ghz,omega_exact_ghz,omega_approx_ghz,omega_sq_exact,omega_sq_approx";
inline constexpr const char* kGateSweepHeader = "alpha_ghz,leakage_avg,leakage_max,phase_error_rad";

// Malformed input file; the message carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Reads a sweep CSV back into samples (omega from the exact column).
RabiDataset read_sweep_csv(std::istream& in);

// args excludes the program name. Reports go to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrabi::cli
