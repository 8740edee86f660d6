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

#include "qrabi/fluxonium.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "qrabi/core.hpp"

namespace qrabi {
namespace {

constexpr int kBand = 4;

// Central-difference stencils, 8th order, offsets 0..4 (second derivative)
// and 1..4 (first derivative, antisymmetric).
constexpr std::array<double, 5> kSecondDerivative = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0,
                                                     8.0 / 315.0, -1.0 / 560.0};
constexpr std::array<double, 4> kFirstDerivative = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0,
                                                    -1.0 / 280.0};

constexpr double kTailFraction = 0.9;
constexpr double kTailLimit = 1e-8;
constexpr double kResolutionLimit = 1e-4;
constexpr double kConvergedShift = 1e-6;

struct GridSolution {
    std::vector<double> phi;
    double spacing = 0.0;
    std::vector<double> energies;
    Eigen::MatrixXd modes;  // n_points x n_levels, unit columns
};

// Symmetric band matrix in LAPACK lower storage: ab[(i - j) + j * ld] = H(i, j).
std::vector<double> band_hamiltonian(const FluxoniumParams& p, const GridSolution& grid) {
    const int n = static_cast<int>(grid.phi.size());
    const int ld = kBand + 1;
    const double kinetic = -4.0 * p.ec / (grid.spacing * grid.spacing);
    const double offset = kTwoPi * p.flux;
    std::vector<double> ab(static_cast<std::size_t>(ld) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double x = grid.phi[j];
        const std::size_t col = static_cast<std::size_t>(j) * ld;
        ab[col] = kinetic * kSecondDerivative[0] + 0.5 * p.el * x * x - p.ej * std::cos(x - offset);
        for (int o = 1; o <= kBand && j + o < n; ++o) {
            ab[col + o] = kinetic * kSecondDerivative[o];
        }
    }
    return ab;
}

// Lowest eigenvalues by bisection on the band-reduced tridiagonal form.
std::vector<double> lowest_eigenvalues(std::vector<double> ab, int n, int count) {
    std::vector<double> w(n);
    std::vector<lapack_int> ifail(n);
    lapack_int found = 0;
    const double abstol = 2.0 * LAPACKE_dlamch('S');
    const lapack_int info =
        LAPACKE_dsbevx(LAPACK_COL_MAJOR, 'N', 'I', 'L', n, kBand, ab.data(), kBand + 1, nullptr, 1,
                       0.0, 0.0, 1, count, abstol, &found, w.data(), nullptr, 1, ifail.data());
    if (info != 0 || found != count) {
        throw ConvergenceError("banded eigenvalue solver failed (info " + std::to_string(info) + ")");
    }
    w.resize(count);
    return w;
}

// Eigenvector for a known eigenvalue by shifted inverse iteration on the
// band matrix, orthogonalized against the lower modes already found.
Eigen::VectorXd inverse_iteration(const std::vector<double>& ab, int n, double eigenvalue,
                                  const Eigen::MatrixXd& lower, int n_lower) {
    const int ldg = 3 * kBand + 1;
    std::vector<double> lu(static_cast<std::size_t>(ldg) * n, 0.0);
    const double shift = eigenvalue + 1e-11 * (1.0 + std::abs(eigenvalue));
    for (int j = 0; j < n; ++j) {
        for (int i = std::max(0, j - kBand); i <= std::min(n - 1, j + kBand); ++i) {
            const int lo = std::max(i, j);
            const int hi = std::min(i, j);
            double v = ab[(lo - hi) + static_cast<std::size_t>(hi) * (kBand + 1)];
            if (i == j) {
                v -= shift;
            }
            lu[(2 * kBand + i - j) + static_cast<std::size_t>(j) * ldg] = v;
        }
    }
    std::vector<lapack_int> pivots(n);
    lapack_int info =
        LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kBand, kBand, lu.data(), ldg, pivots.data());
    if (info < 0) {
        throw ConvergenceError("band LU factorization failed");
    }

    // Asymmetric start vector so that neither parity sector is missed.
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) {
        x(i) = 1.0 + 0.5 * std::sin(0.37 * i + 0.1);
    }
    for (int iter = 0; iter < 4; ++iter) {
        info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kBand, kBand, 1, lu.data(), ldg,
                              pivots.data(), x.data(), n);
        if (info != 0) {
            throw ConvergenceError("band LU solve failed");
        }
        for (int m = 0; m < n_lower; ++m) {
            x -= lower.col(m).dot(x) * lower.col(m);
        }
        x.normalize();
    }
    Eigen::Index largest = 0;
    x.cwiseAbs().maxCoeff(&largest);
    if (x(largest) < 0.0) {
        x = -x;
    }
    return x;
}

// Interior points of [-phi_max, phi_max]; the endpoints carry psi = 0.
GridSolution make_grid(double phi_max, int n_points) {
    GridSolution g;
    g.spacing = 2.0 * phi_max / (n_points + 1);
    g.phi.resize(n_points);
    for (int i = 0; i < n_points; ++i) {
        g.phi[i] = -phi_max + (i + 1) * g.spacing;
    }
    return g;
}

GridSolution diagonalize(const FluxoniumParams& p, double phi_max, int n_points, int n_levels) {
    GridSolution sol = make_grid(phi_max, n_points);
    const std::vector<double> ab = band_hamiltonian(p, sol);
    sol.energies = lowest_eigenvalues(ab, n_points, n_levels);
    sol.modes.resize(n_points, n_levels);
    for (int m = 0; m < n_levels; ++m) {
        sol.modes.col(m) = inverse_iteration(ab, n_points, sol.energies[m], sol.modes, m);
    }
    return sol;
}

Eigen::VectorXd derivative(const Eigen::VectorXd& v, double h) {
    const Eigen::Index n = v.size();
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int o = 1; o <= kBand; ++o) {
            const double right = i + o < n ? v(i + o) : 0.0;
            const double left = i - o >= 0 ? v(i - o) : 0.0;
            acc += kFirstDerivative[o - 1] * (right - left);
        }
        d(i) = acc / h;
    }
    return d;
}

}  // namespace

void validate(const FluxoniumParams& p) {
    if (!std::isfinite(p.ec) || !std::isfinite(p.el) || !std::isfinite(p.ej) ||
        !std::isfinite(p.flux)) {
        throw DomainError("fluxonium parameters must be finite");
    }
    if (!(p.ec > 0.0) || !(p.el > 0.0)) {
        throw DomainError("fluxonium needs E_C > 0 and E_L > 0");
    }
    if (p.ej < 0.0) {
        throw DomainError("fluxonium needs E_J >= 0");
    }
}

void validate(const SolverGrid& grid) {
    if (!(grid.phi_max >= 4.0 * kPi)) {
        throw DomainError("phase grid half-width must be at least 4 pi");
    }
    if (grid.n_points < 501 || grid.n_points % 2 == 0) {
        throw DomainError("phase grid needs an odd number of points >= 501, got " +
                          std::to_string(grid.n_points));
    }
}

FluxoniumSpectrum solve_spectrum(const FluxoniumParams& p, const SolverGrid& grid, int n_levels) {
    validate(p);
    validate(grid);
    if (n_levels < 3 || n_levels >= grid.n_points) {
        throw DomainError("number of levels must be at least 3 and below the grid size");
    }

    const GridSolution sol = diagonalize(p, grid.phi_max, grid.n_points, n_levels);
    // Refined grid with every second point shared with the base grid.
    const int n_fine = 2 * grid.n_points + 1;
    const std::vector<double> fine =
        lowest_eigenvalues(band_hamiltonian(p, make_grid(grid.phi_max, n_fine)), n_fine, 2);

    FluxoniumSpectrum s;
    s.levels = sol.energies;
    s.nu01 = s.levels[1] - s.levels[0];
    s.nu12 = s.levels[2] - s.levels[1];
    s.alpha = s.nu12 - s.nu01;
    s.convergence_shift = std::abs((fine[1] - fine[0]) - s.nu01);
    s.converged = s.convergence_shift < kConvergedShift;
    if (s.convergence_shift > kResolutionLimit) {
        throw ResolutionError("phase grid not converged: refining shifts nu01 by " +
                              std::to_string(s.convergence_shift) + " GHz");
    }

    const Eigen::Map<const Eigen::VectorXd> phi(sol.phi.data(),
                                                static_cast<Eigen::Index>(sol.phi.size()));
    Eigen::MatrixXd d_modes(sol.modes.rows(), n_levels);
    for (int m = 0; m < n_levels; ++m) {
        d_modes.col(m) = derivative(sol.modes.col(m), sol.spacing);
    }
    s.phi_elems = (sol.modes.transpose() * phi.asDiagonal() * sol.modes).cwiseAbs();
    s.n_elems = (sol.modes.transpose() * d_modes).cwiseAbs();

    const double edge = kTailFraction * grid.phi_max;
    for (int m = 0; m < n_levels; ++m) {
        double tail = 0.0;
        for (Eigen::Index i = 0; i < phi.size(); ++i) {
            if (std::abs(phi(i)) > edge) {
                tail += sol.modes(i, m) * sol.modes(i, m);
            }
        }
        s.tail_mass = std::max(s.tail_mass, tail);
    }
    if (s.tail_mass > kTailLimit) {
        throw BoxTooSmallError("wavefunction tail mass " + std::to_string(s.tail_mass) +
                               " exceeds 1e-8; enlarge phi_max");
    }
    return s;
}

namespace {

const Eigen::MatrixXd& channel_matrix(const FluxoniumSpectrum& s, DriveChannel channel) {
    if (s.levels.size() < 3) {
        throw DomainError("drive ratio needs at least 3 levels");
    }
    return channel == DriveChannel::charge ? s.n_elems : s.phi_elems;
}

}  // namespace

double drive_ratio(const FluxoniumSpectrum& s, DriveChannel channel) {
    const Eigen::MatrixXd& m = channel_matrix(s, channel);
    if (m(0, 1) < 1e-12) {
        throw DomainError("0-1 matrix element vanishes; drive ratio undefined");
    }
    return m(1, 2) / m(0, 1);
}

double conjugate_ratio_check(const FluxoniumSpectrum& s) {
    const double k_charge = drive_ratio(s, DriveChannel::charge);
    const double k_flux = drive_ratio(s, DriveChannel::flux);
    return std::abs(k_charge / ((s.nu12 / s.nu01) * k_flux) - 1.0);
}

}  // namespace qrabi
