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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "damped_grover/bloch.hpp"
#include "damped_grover/search_params.hpp"
#include "damped_grover/spectral.hpp"

namespace damped_grover {

/// Rounding slack tolerated when clamping probabilities back into [0, 1].
inline constexpr double k_probability_clamp_tol = 1e-12;

/// Eigenvalues and probabilities this close to {0, 1} are snapped before
/// logs are taken (the 0 ln 0 = 0 convention).
inline constexpr double k_log_snap_tol = 1e-15;

/// Bloch norms above 1 by more than this are rejected as unphysical.
inline constexpr double k_norm_physicality_tol = 1e-9;

/// P_suc = (1 - r_z) / 2, clamped to [0, 1] if rounding pushed it outside
/// by at most k_probability_clamp_tol.
inline double success_probability(const BlochState &state) {
    double p = 0.5 * (1.0 - state.z);
    if (p < 0.0 && p >= -k_probability_clamp_tol) {
        return 0.0;
    }
    if (p > 1.0 && p <= 1.0 + k_probability_clamp_tol) {
        return 1.0;
    }
    return p;
}

/// Eigenvalues (1 + ||r||) / 2 >= (1 - ||r||) / 2 of the effective-qubit
/// density matrix. Throws std::domain_error when ||r|| > 1 beyond the
/// physicality tolerance.
inline std::pair<double, double> state_eigenvalues(const BlochState &state) {
    double n = state.norm();
    if (n > 1.0 + k_norm_physicality_tol) {
        throw std::domain_error(
            "Bloch vector norm " + std::to_string(n) + " exceeds 1; state is unphysical");
    }
    n = std::min(n, 1.0);
    return {0.5 * (1.0 + n), 0.5 * (1.0 - n)};
}

namespace detail {

inline double entropy_term(double lambda) {
    if (lambda <= k_log_snap_tol || lambda >= 1.0 - k_log_snap_tol) {
        return 0.0;
    }
    return -lambda * std::log(lambda);
}

}  // namespace detail

/// Von Neumann entropy -sum lambda ln lambda in nats; in [0, ln 2] for the
/// rank-2 support of this model.
inline double von_neumann_entropy(const BlochState &state) {
    auto [high, low] = state_eigenvalues(state);
    return detail::entropy_term(high) + detail::entropy_term(low);
}

/// Diagonal of the register density matrix in the computational basis:
/// P/M on each of the M marked items and (1-P)/(N-M) on the rest. Never
/// materialized as a length-N array, so N up to 2^40 stays cheap.
struct DiagonalProfile {
    double p_suc;
    std::uint64_t n_items;
    std::uint64_t n_marked;

    double marked_weight() const { return p_suc / static_cast<double>(n_marked); }

    double unmarked_weight() const {
        return (1.0 - p_suc) / static_cast<double>(n_items - n_marked);
    }

    /// Shannon entropy of the implied distribution,
    /// P ln(M/P) + (1-P) ln((N-M)/(1-P)), in nats.
    double entropy() const {
        double marked = (p_suc <= k_log_snap_tol)
                            ? 0.0
                            : p_suc * (std::log(static_cast<double>(n_marked)) - std::log(p_suc));
        double unmarked =
            (p_suc >= 1.0 - k_log_snap_tol)
                ? 0.0
                : (1.0 - p_suc) *
                      (std::log(static_cast<double>(n_items - n_marked)) - std::log1p(-p_suc));
        return marked + unmarked;
    }
};

/// Relative entropy of coherence in the computational basis: the entropy of
/// the dephased (diagonal) state minus the entropy of the state itself.
inline double coherence_relative_entropy(const BlochState &state, const SearchParams &params) {
    DiagonalProfile profile{success_probability(state), params.n_items, params.n_marked};
    return profile.entropy() - von_neumann_entropy(state);
}

/// Binary Shannon entropy h1(p) = -p ln p - (1-p) ln(1-p) in nats.
inline double binary_entropy(double p) {
    return detail::entropy_term(p) + detail::entropy_term(1.0 - p);
}

/// Two-sided bound on C1 + S1: h1(P_suc) from below, the diagonal entropy
/// from above. The upper bound is saturated in this noise model.
struct TradeoffBounds {
    double lower;
    double upper;
    double c1_plus_s1;
};

inline TradeoffBounds tradeoff_bounds(const BlochState &state, const SearchParams &params) {
    double p = success_probability(state);
    DiagonalProfile profile{p, params.n_items, params.n_marked};
    double c1 = coherence_relative_entropy(state, params);
    double s1 = von_neumann_entropy(state);
    return TradeoffBounds{binary_entropy(p), profile.entropy(), c1 + s1};
}

/// Iteration index of the k-th success-probability peak, t_k = (2k-1) pi /
/// (2 theta), from the exact rotation angle.
inline double peak_iteration_estimate(const SearchParams &params, std::uint64_t k) {
    if (k < 1) {
        throw std::invalid_argument("peak index k must be >= 1");
    }
    return (2.0 * static_cast<double>(k) - 1.0) * std::numbers::pi / (2.0 * params.theta);
}

/// Small-angle form of the same estimate, (2k-1) (pi/4) sqrt(N/M); exposed
/// for reporting alongside the exact-angle value.
inline double peak_iteration_estimate_small_angle(const SearchParams &params, std::uint64_t k) {
    if (k < 1) {
        throw std::invalid_argument("peak index k must be >= 1");
    }
    double ratio = static_cast<double>(params.n_items) / static_cast<double>(params.n_marked);
    return (2.0 * static_cast<double>(k) - 1.0) * (std::numbers::pi / 4.0) * std::sqrt(ratio);
}

/// Predicted ratio of the k-th transient peak amplitude of params_a to that
/// of params_b, with amplitudes decaying as exp(-alpha t), alpha =
/// -(3/2) ln(1 - gamma).
///
/// Supports two comparisons: same (N, M) with different gamma, giving
/// exp((alpha_b - alpha_a) t_k); same (M, gamma) with different N, giving
/// exp((2k-1) pi alpha (sqrt(N_b) - sqrt(N_a)) / (4 sqrt(M))). Both sides
/// must be in the trigonometric regime (leading-order estimates; no meaning
/// in the overdamped case).
inline double peak_decay_ratio(const SearchParams &params_a, const SearchParams &params_b,
                               std::uint64_t k) {
    if (k < 1) {
        throw std::invalid_argument("peak index k must be >= 1");
    }
    if (spectral_data(params_a).regime != Regime::trigonometric ||
        spectral_data(params_b).regime != Regime::trigonometric) {
        throw std::domain_error(
            "peak_decay_ratio requires both parameter sets in the trigonometric regime");
    }
    auto alpha = [](double gamma) { return -1.5 * std::log1p(-gamma); };
    if (params_a.n_items == params_b.n_items && params_a.n_marked == params_b.n_marked) {
        double tk = peak_iteration_estimate(params_a, k);
        return std::exp((alpha(params_b.gamma) - alpha(params_a.gamma)) * tk);
    }
    if (params_a.n_marked == params_b.n_marked && params_a.gamma == params_b.gamma) {
        double spread = std::sqrt(static_cast<double>(params_b.n_items)) -
                        std::sqrt(static_cast<double>(params_a.n_items));
        double root_marked = std::sqrt(static_cast<double>(params_a.n_marked));
        return std::exp((2.0 * static_cast<double>(k) - 1.0) * std::numbers::pi *
                        alpha(params_a.gamma) * spread / (4.0 * root_marked));
    }
    throw std::domain_error(
        "peak_decay_ratio requires the parameter sets to differ only in gamma or only in "
        "n_items");
}

}  // namespace damped_grover
