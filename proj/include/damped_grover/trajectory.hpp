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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "damped_grover/analytics.hpp"
#include "damped_grover/bloch.hpp"
#include "damped_grover/search_params.hpp"

namespace damped_grover {

/// Default upper bound on trajectory length; asymptotics beyond it are
/// available in closed form.
inline constexpr std::uint64_t k_default_step_cap = 10'000'000;

/// One sampled iteration: the state plus the scalar observables evaluated
/// at it.
struct TrajectoryPoint {
    std::uint64_t t;
    BlochState state;
    double p_suc;
    double s1;
    double c1;
};

inline TrajectoryPoint make_trajectory_point(std::uint64_t t, const BlochState &state,
                                             const SearchParams &params) {
    return TrajectoryPoint{t, state, success_probability(state), von_neumann_entropy(state),
                           coherence_relative_entropy(state, params)};
}

/// Iterates the exact recursion from the uniform initial state and records
/// every point t = 0..t_max. Throws std::length_error when t_max exceeds
/// the step cap.
inline std::vector<TrajectoryPoint> run_trajectory(const SearchParams &params,
                                                   std::uint64_t t_max,
                                                   std::uint64_t step_cap = k_default_step_cap) {
    if (t_max > step_cap) {
        throw std::length_error("t_max " + std::to_string(t_max) + " exceeds the step cap " +
                                std::to_string(step_cap));
    }
    std::vector<TrajectoryPoint> points;
    points.reserve(t_max + 1);
    BlochState state = initial_state(params);
    points.push_back(make_trajectory_point(0, state, params));
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        state = iterate_once(state, params);
        points.push_back(make_trajectory_point(t, state, params));
    }
    return points;
}

}  // namespace damped_grover
