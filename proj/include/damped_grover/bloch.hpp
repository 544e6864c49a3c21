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

#include "damped_grover/search_params.hpp"

namespace damped_grover {

/// State of the effective qubit spanned by the marked subspace |w> and the
/// unmarked subspace |m>, as the (x, z) part of its Bloch vector. The y
/// component is identically zero for this dynamics, so it is not stored.
///
/// Physical states satisfy x^2 + z^2 <= 1 (up to rounding); success
/// probability is (1 - z) / 2.
struct BlochState {
    double x;
    double z;

    double norm() const { return std::hypot(x, z); }
};

/// Bloch vector of the uniform superposition: (sin theta, cos theta).
inline BlochState initial_state(const SearchParams &params) {
    return BlochState{params.sin_theta(), params.cos_theta()};
}

/// Collective amplitude damping channel on the Bloch disk:
/// (x, z) -> (sqrt(1 - gamma) x, gamma + (1 - gamma) z).
/// Fixes (0, 1) for every gamma and is the identity at gamma = 0.
inline BlochState apply_damping(const BlochState &state, const SearchParams &params) {
    return BlochState{std::sqrt(params.wamma) * state.x, params.gamma + params.wamma * state.z};
}

/// Oracle reflection about the z axis: (x, z) -> (-x, z).
inline BlochState apply_oracle(const BlochState &state) {
    return BlochState{-state.x, state.z};
}

/// Diffusion reflection: (x, z) -> (-cos2t x + sin2t z, sin2t x + cos2t z)
/// with 2t = 2 theta.
inline BlochState apply_diffusion(const BlochState &state, const SearchParams &params) {
    double c2 = params.cos_two_theta();
    double s2 = params.sin_two_theta();
    return BlochState{-c2 * state.x + s2 * state.z, s2 * state.x + c2 * state.z};
}

/// One full damped Grover iteration: damping, oracle, damping, diffusion,
/// applied in that order.
inline BlochState iterate_once(const BlochState &state, const SearchParams &params) {
    BlochState s = apply_damping(state, params);
    s = apply_oracle(s);
    s = apply_damping(s, params);
    return apply_diffusion(s, params);
}

/// Same map written as the affine recursion
///   r(t+1) = wamma * M * r(t) + (1 - wamma^2) * (sin2theta, cos2theta)
/// with M = [[cos2t, wamma sin2t], [-sin2t, wamma cos2t]]. Agrees with
/// iterate_once to rounding; kept as an independent algebraic route.
inline BlochState iterate_once_affine(const BlochState &state, const SearchParams &params) {
    double w = params.wamma;
    double c2 = params.cos_two_theta();
    double s2 = params.sin_two_theta();
    double drive = 1.0 - w * w;
    return BlochState{
        w * (c2 * state.x + w * s2 * state.z) + drive * s2,
        w * (-s2 * state.x + w * c2 * state.z) + drive * c2,
    };
}

}  // namespace damped_grover
