// Copyright 2026 The damped_grover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "damped_grover/bloch.hpp"
#include "damped_grover/search_params.hpp"

// Brute-force verification path. Evolution here goes through explicit 2x2
// complex matrix products and shares no arithmetic with the Bloch-vector
// engine, so agreement between the two is evidence rather than tautology.

namespace damped_grover {

inline constexpr double k_density_hermiticity_tol = 1e-14;
inline constexpr double k_density_trace_tol = 1e-14;
inline constexpr double k_density_ry_tol = 1e-12;

/// Dense 2x2 complex matrix in the {|w>, |m>} basis, row-major.
struct Matrix2c {
    std::complex<double> a;  // (w, w)
    std::complex<double> b;  // (w, m)
    std::complex<double> c;  // (m, w)
    std::complex<double> d;  // (m, m)
};

inline Matrix2c multiply(const Matrix2c &lhs, const Matrix2c &rhs) {
    return Matrix2c{
        lhs.a * rhs.a + lhs.b * rhs.c,
        lhs.a * rhs.b + lhs.b * rhs.d,
        lhs.c * rhs.a + lhs.d * rhs.c,
        lhs.c * rhs.b + lhs.d * rhs.d,
    };
}

inline Matrix2c adjoint(const Matrix2c &m) {
    return Matrix2c{std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

inline Matrix2c add(const Matrix2c &lhs, const Matrix2c &rhs) {
    return Matrix2c{lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c, lhs.d + rhs.d};
}

/// Density matrix of the effective qubit, entries rho_ww, rho_wm, rho_mw,
/// rho_mm. Complex entries are retained even though the standard
/// trajectories stay real, so the Hermiticity and reality invariants are
/// genuine checks.
struct DensityMatrix2 {
    std::complex<double> ww;
    std::complex<double> wm;
    std::complex<double> mw;
    std::complex<double> mm;

    Matrix2c as_matrix() const { return Matrix2c{ww, wm, mw, mm}; }

    static DensityMatrix2 from_matrix(const Matrix2c &m) {
        return DensityMatrix2{m.a, m.b, m.c, m.d};
    }

    std::complex<double> trace() const { return ww + mm; }
};

/// rho = (I + r_x X + r_z Z) / 2 for the real Bloch vector (r_x, 0, r_z).
inline DensityMatrix2 from_bloch(const BlochState &state) {
    return DensityMatrix2{
        std::complex<double>{0.5 * (1.0 + state.z), 0.0},
        std::complex<double>{0.5 * state.x, 0.0},
        std::complex<double>{0.5 * state.x, 0.0},
        std::complex<double>{0.5 * (1.0 - state.z), 0.0},
    };
}

/// Inverse map. Rejects matrices that are not Hermitian with unit trace, or
/// whose Bloch r_y component exceeds the reality tolerance (this dynamics
/// keeps r_y identically zero).
inline BlochState to_bloch(const DensityMatrix2 &rho) {
    if (std::abs(rho.mw - std::conj(rho.wm)) > k_density_hermiticity_tol ||
        std::abs(rho.ww.imag()) > k_density_hermiticity_tol ||
        std::abs(rho.mm.imag()) > k_density_hermiticity_tol) {
        throw std::domain_error("density matrix is not Hermitian within tolerance");
    }
    if (std::abs(rho.trace() - 1.0) > k_density_trace_tol) {
        throw std::domain_error("density matrix trace deviates from 1 beyond tolerance");
    }
    double r_y = -2.0 * rho.wm.imag();
    if (std::abs(r_y) > k_density_ry_tol) {
        throw std::domain_error("Bloch r_y component " + std::to_string(r_y) +
                                " is nonzero; state left the r_y = 0 plane");
    }
    return BlochState{2.0 * rho.wm.real(), (rho.ww - rho.mm).real()};
}

/// Amplitude-damping Kraus pair E0 = diag(1, sqrt(1-gamma)), E1 with the
/// single off-diagonal entry sqrt(gamma). E0^dag E0 + E1^dag E1 = I.
inline std::array<Matrix2c, 2> damping_kraus_operators(const SearchParams &params) {
    double root_w = std::sqrt(params.wamma);
    double root_g = std::sqrt(params.gamma);
    Matrix2c e0{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {root_w, 0.0}};
    Matrix2c e1{{0.0, 0.0}, {root_g, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    return {e0, e1};
}

/// E0 rho E0^dag + E1 rho E1^dag.
inline DensityMatrix2 apply_kraus_damping(const DensityMatrix2 &rho, const SearchParams &params) {
    auto [e0, e1] = damping_kraus_operators(params);
    Matrix2c m = rho.as_matrix();
    Matrix2c out = add(multiply(multiply(e0, m), adjoint(e0)),
                       multiply(multiply(e1, m), adjoint(e1)));
    return DensityMatrix2::from_matrix(out);
}

/// One full noisy iteration in the density-matrix picture:
/// K Phi_E(J Phi_E(rho) J^dag) K^dag with J = diag(1, -1) and the
/// state-space diffusion matrix K = [[cos theta, sin theta],
/// [sin theta, -cos theta]] (the Bloch-picture matrix uses 2 theta).
inline DensityMatrix2 apply_unitary_step(const DensityMatrix2 &rho, const SearchParams &params) {
    Matrix2c j{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};
    double ct = params.cos_theta();
    double st = params.sin_theta();
    Matrix2c k{{ct, 0.0}, {st, 0.0}, {st, 0.0}, {-ct, 0.0}};
    DensityMatrix2 damped = apply_kraus_damping(rho, params);
    Matrix2c oracled = multiply(multiply(j, damped.as_matrix()), adjoint(j));
    DensityMatrix2 damped_again = apply_kraus_damping(DensityMatrix2::from_matrix(oracled), params);
    Matrix2c diffused = multiply(multiply(k, damped_again.as_matrix()), adjoint(k));
    return DensityMatrix2::from_matrix(diffused);
}

/// Noiseless Grover success probability sin^2((2t+1) theta / 2).
inline double noiseless_success(const SearchParams &params, std::uint64_t t) {
    double amplitude = std::sin((2.0 * static_cast<double>(t) + 1.0) * params.theta / 2.0);
    return amplitude * amplitude;
}

}  // namespace damped_grover
