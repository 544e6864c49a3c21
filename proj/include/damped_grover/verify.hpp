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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "damped_grover/analytics.hpp"
#include "damped_grover/bloch.hpp"
#include "damped_grover/density_matrix.hpp"
#include "damped_grover/search_params.hpp"

namespace damped_grover {

/// Cross-check between independent engines failed.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double k_oracle_equivalence_tol = 1e-11;
inline constexpr std::uint64_t k_oracle_equivalence_steps = 500;

/// Physicality slack allowed to accumulate along a density-matrix
/// trajectory: trace drift and imaginary residue grow by O(ulp) per step,
/// so the strict single-conversion to_bloch tolerances do not apply here.
inline constexpr double k_oracle_trajectory_trace_tol = 1e-13;
inline constexpr double k_oracle_trajectory_reality_tol = 1e-12;

struct EquivalenceCase {
    std::uint64_t n_items;
    std::uint64_t n_marked;
    double gamma;
};

/// N in {16, 128, 512} x M in {1, 2, N/4} x gamma in
/// {0, 0.01, 0.05, 0.2, 0.8, 1}.
inline std::vector<EquivalenceCase> default_equivalence_cases() {
    std::vector<EquivalenceCase> cases;
    for (std::uint64_t n : {16u, 128u, 512u}) {
        for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{2}, n / 4}) {
            for (double gamma : {0.0, 0.01, 0.05, 0.2, 0.8, 1.0}) {
                cases.push_back(EquivalenceCase{n, m, gamma});
            }
        }
    }
    return cases;
}

struct VerificationReport {
    std::size_t cases_checked = 0;
    std::uint64_t steps_per_case = 0;
    double max_deviation = 0.0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Steps the Bloch recursion and the Kraus density-matrix evolution side by
/// side from the same initial state and compares Bloch components and
/// success probabilities at every iteration. Records at most one failure
/// line per case.
inline VerificationReport run_oracle_equivalence_check(
    const std::vector<EquivalenceCase> &cases = default_equivalence_cases(),
    std::uint64_t t_max = k_oracle_equivalence_steps, double tol = k_oracle_equivalence_tol) {
    VerificationReport report;
    report.steps_per_case = t_max;
    for (const EquivalenceCase &c : cases) {
        SearchParams params = make_params(c.n_items, c.n_marked, c.gamma);
        std::string label = "N=" + std::to_string(c.n_items) + " M=" + std::to_string(c.n_marked) +
                            " gamma=" + std::to_string(c.gamma);
        BlochState state = initial_state(params);
        DensityMatrix2 rho = from_bloch(state);
        for (std::uint64_t t = 0; t <= t_max; ++t) {
            // Physicality at trajectory tolerances (drift accumulates by
            // O(ulp) per step, so the strict to_bloch gates would misfire).
            if (std::abs(rho.trace() - 1.0) > k_oracle_trajectory_trace_tol ||
                std::abs(rho.mw - std::conj(rho.wm)) > k_oracle_trajectory_reality_tol ||
                std::abs(rho.ww.imag()) > k_oracle_trajectory_reality_tol ||
                std::abs(rho.mm.imag()) > k_oracle_trajectory_reality_tol ||
                std::abs(-2.0 * rho.wm.imag()) > k_oracle_trajectory_reality_tol) {
                report.failures.push_back(label + " t=" + std::to_string(t) +
                                          ": oracle state unphysical");
                break;
            }
            BlochState oracle_state{2.0 * rho.wm.real(), (rho.ww - rho.mm).real()};
            double deviation = std::max({std::abs(oracle_state.x - state.x),
                                         std::abs(oracle_state.z - state.z),
                                         std::abs(rho.mm.real() - success_probability(state))});
            report.max_deviation = std::max(report.max_deviation, deviation);
            if (deviation > tol) {
                report.failures.push_back(label + " t=" + std::to_string(t) + ": deviation " +
                                          std::to_string(deviation) + " exceeds tolerance");
                break;
            }
            if (t < t_max) {
                state = iterate_once(state, params);
                rho = apply_unitary_step(rho, params);
            }
        }
        ++report.cases_checked;
    }
    return report;
}

}  // namespace damped_grover
