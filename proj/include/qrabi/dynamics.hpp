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

// Brute-force time evolution under the three-level RWA Hamiltonian and
// spectral analysis of the resulting population traces.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qrabi/core.hpp"

namespace qrabi {

// Normalized three-level state. Construction rejects norms off by > 1e-12.
class StateVector {
public:
    explicit StateVector(const Eigen::Vector3cd& amplitudes);

    static StateVector basis(int level);

    const Eigen::Vector3cd& amplitudes() const { return amplitudes_; }
    std::complex<double> operator[](int i) const { return amplitudes_(i); }
    double population(int level) const { return std::norm(amplitudes_(level)); }
    double norm() const { return amplitudes_.norm(); }

private:
    Eigen::Vector3cd amplitudes_;
};

// Samples on a uniform, strictly increasing time grid (ns).
template <typename T>
struct TimeSeries {
    std::vector<double> times;
    std::vector<T> values;
};

// t0, t0 + dt, ..., t0 + (n-1) dt.
std::vector<double> uniform_times(double t0, double dt, std::size_t n);

// Throws DomainError unless times are strictly increasing with spacing
// uniform to 1e-12 of the covered span.
void check_uniform(std::span<const double> times);

// psi(t) = sum_j <v_j|psi0> exp(-i 2 pi E_j t) v_j over the eigenpairs of H.
TimeSeries<StateVector> evolve(const ThreeLevelParams& p, const StateVector& initial,
                               std::span<const double> times);

TimeSeries<double> populations(const TimeSeries<StateVector>& series, int level);

// Dominant nonzero frequency (GHz) of a real trace: Hann-windowed DFT with
// 8x zero padding, then a three-point parabola through the log-magnitude
// peak. Needs >= 10 periods and >= 16 samples per period for 0.1% accuracy.
// Throws NoOscillationError when no bin exceeds 3x the spectral median.
double extract_frequency(const TimeSeries<double>& series);

// Frequencies (GHz) of local spectral maxima whose height is at least
// min_relative_height times the tallest one, tallest first.
std::vector<double> spectral_peaks(const TimeSeries<double>& series,
                                   double min_relative_height);

// Ground-state amplitude of a detuned two-level Rabi rotation,
//   a0 = (i detuning / omega) sin(pi omega t) + cos(pi omega t),
// where the printed half-angle Omega t / 2 is taken with omega a linear
// frequency, so one full rotation takes omega t = 1.
std::complex<double> two_level_amplitude(double detuning, double omega, double duration);

}  // namespace qrabi
