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
#include <stdexcept>
#include <string>

namespace damped_grover {

/// Problem instance for Grover search over N items with M marked targets,
/// subject to collective amplitude damping of strength gamma applied around
/// each oracle call and each diffusion step.
///
/// theta is the rotation half-angle fixed by sin^2(theta/2) = M/N; it lies in
/// (0, pi/2], with the right endpoint reached only at M = N/2. wamma caches
/// 1 - gamma.
struct SearchParams {
    std::uint64_t n_items;
    std::uint64_t n_marked;
    double gamma;
    double theta;
    double wamma;

    double cos_theta() const { return std::cos(theta); }
    double sin_theta() const { return std::sin(theta); }
    double cos_two_theta() const { return std::cos(2.0 * theta); }
    double sin_two_theta() const { return std::sin(2.0 * theta); }
};

/// Validates (n_items, n_marked, gamma) and derives theta and wamma.
///
/// Requires n_items a power of two with n_items >= 4, 1 <= n_marked <=
/// n_items / 2, and gamma in [0, 1]. Throws std::invalid_argument naming the
/// violated bound otherwise.
inline SearchParams make_params(std::uint64_t n_items, std::uint64_t n_marked, double gamma) {
    if (n_items < 4 || (n_items & (n_items - 1)) != 0) {
        throw std::invalid_argument(
            "n_items must be a power of two with n_items >= 4, got " + std::to_string(n_items));
    }
    if (n_marked < 1 || n_marked > n_items / 2) {
        throw std::invalid_argument(
            "n_marked must satisfy 1 <= n_marked <= n_items / 2, got n_marked=" +
            std::to_string(n_marked) + " for n_items=" + std::to_string(n_items));
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("gamma must lie in [0, 1], got " + std::to_string(gamma));
    }
    double mu = static_cast<double>(n_marked) / static_cast<double>(n_items);
    double theta = 2.0 * std::asin(std::sqrt(mu));
    return SearchParams{n_items, n_marked, gamma, theta, 1.0 - gamma};
}

}  // namespace damped_grover
