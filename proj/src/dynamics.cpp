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

#include "qrabi/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <fftw3.h>

namespace qrabi {

StateVector::StateVector(const Eigen::Vector3cd& amplitudes) : amplitudes_(amplitudes) {
    const double n2 = amplitudes_.squaredNorm();
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-12) {
        throw DomainError("state vector must be normalized, |psi|^2 = " + std::to_string(n2));
    }
}

StateVector StateVector::basis(int level) {
    if (level < 0 || level > 2) {
        throw DomainError("basis level must be 0, 1 or 2");
    }
    Eigen::Vector3cd v = Eigen::Vector3cd::Zero();
    v(level) = 1.0;
    return StateVector(v);
}

std::vector<double> uniform_times(double t0, double dt, std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = t0 + dt * static_cast<double>(i);
    }
    return t;
}

void check_uniform(std::span<const double> times) {
    if (times.size() < 2) {
        return;
    }
    const double span = times.back() - times.front();
    const double dt = span / static_cast<double>(times.size() - 1);
    if (!(dt > 0.0)) {
        throw DomainError("time grid must be strictly increasing");
    }
    const double tol = 1e-12 * std::max({span, std::abs(times.front()), std::abs(times.back())});
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double step = times[i] - times[i - 1];
        if (!(step > 0.0) || std::abs(step - dt) > tol) {
            throw DomainError("time grid is not uniform at index " + std::to_string(i));
        }
    }
}

TimeSeries<StateVector> evolve(const ThreeLevelParams& p, const StateVector& initial,
                               std::span<const double> times) {
    check_uniform(times);
    const Eigen::SelfAdjointEigenSolver<Hamiltonian> eig(build_hamiltonian(p));
    const Eigen::Vector3d& energies = eig.eigenvalues();
    const Eigen::Matrix3cd& modes = eig.eigenvectors();
    const Eigen::Vector3cd overlaps = modes.adjoint() * initial.amplitudes();

    TimeSeries<StateVector> out;
    out.times.assign(times.begin(), times.end());
    out.values.reserve(times.size());
    for (double t : times) {
        Eigen::Vector3cd phased;
        for (int j = 0; j < 3; ++j) {
            phased(j) = overlaps(j) * std::polar(1.0, -kTwoPi * energies(j) * t);
        }
        // Renormalize away the last few ulps so StateVector's check is exact.
        Eigen::Vector3cd psi = modes * phased;
        psi /= psi.norm();
        out.values.emplace_back(psi);
    }
    return out;
}

TimeSeries<double> populations(const TimeSeries<StateVector>& series, int level) {
    if (level < 0 || level > 2) {
        throw DomainError("population level must be 0, 1 or 2");
    }
    TimeSeries<double> out;
    out.times = series.times;
    out.values.reserve(series.values.size());
    for (const StateVector& s : series.values) {
        out.values.push_back(s.population(level));
    }
    return out;
}

namespace {

constexpr std::size_t kZeroPad = 8;

struct Spectrum {
    std::vector<double> magnitude;  // one-sided, bins 0..m/2
    double bin_width = 0.0;         // GHz
    std::size_t first_valid = 1;    // lowest bin treated as nonzero frequency
};

struct FftwPlan {
    fftw_plan plan = nullptr;
    ~FftwPlan() {
        if (plan != nullptr) {
            fftw_destroy_plan(plan);
        }
    }
};

Spectrum windowed_spectrum(const TimeSeries<double>& series) {
    const std::size_t n = series.values.size();
    if (n < 8 || series.times.size() != n) {
        throw DomainError("frequency extraction needs at least 8 uniformly spaced samples");
    }
    check_uniform(series.times);
    const double dt = (series.times.back() - series.times.front()) / static_cast<double>(n - 1);

    std::size_t m = 1;
    while (m < kZeroPad * n) {
        m <<= 1;
    }
    const double mean =
        std::accumulate(series.values.begin(), series.values.end(), 0.0) / static_cast<double>(n);

    std::vector<double> in(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double hann = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(i) /
                                                 static_cast<double>(n - 1));
        in[i] = (series.values[i] - mean) * hann;
    }
    std::vector<fftw_complex> out(m / 2 + 1);
    FftwPlan plan;
    plan.plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), in.data(), out.data(), FFTW_ESTIMATE);
    fftw_execute(plan.plan);

    Spectrum s;
    s.magnitude.resize(m / 2 + 1);
    for (std::size_t i = 0; i < s.magnitude.size(); ++i) {
        s.magnitude[i] = std::hypot(out[i][0], out[i][1]);
    }
    s.bin_width = 1.0 / (static_cast<double>(m) * dt);
    // The Hann main lobe of the (removed) mean spans two unpadded bins.
    s.first_valid = 2 * (m / n) + 1;
    return s;
}

double interpolate_peak(const Spectrum& s, std::size_t k) {
    const double tiny = 1e-300;
    const double ym = std::log(s.magnitude[k - 1] + tiny);
    const double y0 = std::log(s.magnitude[k] + tiny);
    const double yp = std::log(s.magnitude[k + 1] + tiny);
    const double curvature = ym - 2.0 * y0 + yp;
    const double offset = curvature < 0.0 ? 0.5 * (ym - yp) / curvature : 0.0;
    return (static_cast<double>(k) + offset) * s.bin_width;
}

double median(std::vector<double> v) {
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

}  // namespace

double extract_frequency(const TimeSeries<double>& series) {
    const Spectrum s = windowed_spectrum(series);
    const std::size_t last = s.magnitude.size() - 1;
    if (s.first_valid + 1 >= last) {
        throw NoOscillationError("trace too short to resolve any oscillation");
    }
    std::size_t peak = s.first_valid;
    for (std::size_t i = s.first_valid; i < last; ++i) {
        if (s.magnitude[i] > s.magnitude[peak]) {
            peak = i;
        }
    }
    const std::vector<double> body(s.magnitude.begin() + 1, s.magnitude.end());
    if (!(s.magnitude[peak] > 3.0 * median(body))) {
        throw NoOscillationError("no oscillation detected");
    }
    return interpolate_peak(s, peak);
}

std::vector<double> spectral_peaks(const TimeSeries<double>& series,
                                   double min_relative_height) {
    const Spectrum s = windowed_spectrum(series);
    const std::size_t last = s.magnitude.size() - 1;
    double tallest = 0.0;
    for (std::size_t i = s.first_valid; i < last; ++i) {
        tallest = std::max(tallest, s.magnitude[i]);
    }
    std::vector<std::pair<double, std::size_t>> found;
    for (std::size_t i = s.first_valid; i < last; ++i) {
        const double m = s.magnitude[i];
        if (m > 0.0 && m >= min_relative_height * tallest && m > s.magnitude[i - 1] &&
            m >= s.magnitude[i + 1]) {
            found.emplace_back(m, i);
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<double> freqs;
    freqs.reserve(found.size());
    for (const auto& [mag, bin] : found) {
        freqs.push_back(interpolate_peak(s, bin));
    }
    return freqs;
}

std::complex<double> two_level_amplitude(double detuning, double omega, double duration) {
    if (!(omega > 0.0)) {
        throw DomainError("Rabi frequency must be positive, got " + std::to_string(omega));
    }
    const double half_angle = kPi * omega * duration;
    return {std::cos(half_angle), detuning / omega * std::sin(half_angle)};
}

}  // namespace qrabi
