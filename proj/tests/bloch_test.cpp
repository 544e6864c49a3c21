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

#include "damped_grover/bloch.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "damped_grover/analytics.hpp"
#include "damped_grover/spectral.hpp"
#include "damped_grover/trajectory.hpp"
#include "gtest/gtest.h"

namespace dg = damped_grover;

namespace {

dg::BlochState random_physical_state(std::mt19937 &rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    while (true) {
        dg::BlochState state{unit(rng), unit(rng)};
        if (state.x * state.x + state.z * state.z <= 1.0) {
            return state;
        }
    }
}

dg::SearchParams random_params(std::mt19937 &rng) {
    std::uniform_int_distribution<int> log_n(2, 16);
    std::uniform_real_distribution<double> gamma(0.0, 1.0);
    std::uint64_t n = std::uint64_t{1} << log_n(rng);
    std::uniform_int_distribution<std::uint64_t> marked(1, n / 2);
    return dg::make_params(n, marked(rng), gamma(rng));
}

}  // namespace

TEST(BlochTest, InitialStateExamples) {
    dg::SearchParams p = dg::make_params(4, 1, 0.0);
    dg::BlochState s = dg::initial_state(p);
    EXPECT_NEAR(s.x, std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_NEAR(s.z, 0.5, 1e-15);

    dg::BlochState wide = dg::initial_state(dg::make_params(128, 2, 0.0));
    EXPECT_NEAR(wide.z, 0.96875, 1e-14);

    std::mt19937 rng(20260819);
    for (int i = 0; i < 50; ++i) {
        EXPECT_NEAR(dg::initial_state(random_params(rng)).norm(), 1.0, 1e-14);
    }
}

TEST(BlochTest, DampingExamples) {
    dg::BlochState s{0.3, 0.4};
    dg::BlochState id = dg::apply_damping(s, dg::make_params(16, 1, 0.0));
    EXPECT_EQ(id.x, 0.3);
    EXPECT_EQ(id.z, 0.4);

    dg::BlochState full = dg::apply_damping(s, dg::make_params(16, 1, 1.0));
    EXPECT_EQ(full.x, 0.0);
    EXPECT_EQ(full.z, 1.0);
}

TEST(BlochTest, DampingFixesNorthPoleExactly) {
    for (int i = 0; i <= 1000; ++i) {
        double gamma = static_cast<double>(i) / 1000.0;
        dg::BlochState fixed = dg::apply_damping({0.0, 1.0}, dg::make_params(16, 1, gamma));
        EXPECT_EQ(fixed.x, 0.0) << "gamma=" << gamma;
        EXPECT_EQ(fixed.z, 1.0) << "gamma=" << gamma;
    }
}

TEST(BlochTest, DampingKeepsTheDisk) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> gamma(0.0, 1.0);
    std::uniform_real_distribution<double> stretch(0.0, 1.5);
    for (int i = 0; i < 500; ++i) {
        dg::BlochState s = random_physical_state(rng);
        double factor = stretch(rng);
        s.x *= factor;
        s.z *= factor;
        dg::SearchParams p = dg::make_params(16, 1, gamma(rng));
        double bound = std::max(s.norm(), 1.0);
        EXPECT_LE(dg::apply_damping(s, p).norm(), bound + 1e-12);
    }
}

TEST(BlochTest, OracleIsSignFlipInvolution) {
    dg::BlochState s = dg::apply_oracle({0.5, 0.2});
    EXPECT_EQ(s.x, -0.5);
    EXPECT_EQ(s.z, 0.2);

    dg::BlochState twice = dg::apply_oracle(dg::apply_oracle({0.5, 0.2}));
    EXPECT_EQ(twice.x, 0.5);
    EXPECT_EQ(twice.z, 0.2);

    dg::BlochState axis = dg::apply_oracle({0.0, -0.7});
    EXPECT_EQ(axis.x, 0.0);
    EXPECT_EQ(axis.z, -0.7);
}

TEST(BlochTest, DiffusionIsReflection) {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        dg::SearchParams p = random_params(rng);
        dg::BlochState s = random_physical_state(rng);
        dg::BlochState twice = dg::apply_diffusion(dg::apply_diffusion(s, p), p);
        EXPECT_NEAR(twice.x, s.x, 1e-12);
        EXPECT_NEAR(twice.z, s.z, 1e-12);
    }

    dg::SearchParams p = dg::make_params(4, 1, 0.0);
    dg::BlochState zero = dg::apply_diffusion({0.0, 0.0}, p);
    EXPECT_EQ(zero.x, 0.0);
    EXPECT_EQ(zero.z, 0.0);

    // Hand-evaluated matrix product for theta = pi/3.
    double c2 = p.cos_two_theta();
    double s2 = p.sin_two_theta();
    dg::BlochState in{0.25, -0.5};
    dg::BlochState out = dg::apply_diffusion(in, p);
    EXPECT_NEAR(out.x, -c2 * 0.25 + s2 * -0.5, 1e-15);
    EXPECT_NEAR(out.z, s2 * 0.25 + c2 * -0.5, 1e-15);
}

TEST(BlochTest, IterateOnceMatchesAffineForm) {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        dg::SearchParams p = random_params(rng);
        dg::BlochState s = random_physical_state(rng);
        dg::BlochState composed = dg::iterate_once(s, p);
        dg::BlochState affine = dg::iterate_once_affine(s, p);
        EXPECT_NEAR(composed.x, affine.x, 1e-12);
        EXPECT_NEAR(composed.z, affine.z, 1e-12);
    }
}

TEST(BlochTest, NoiselessIterationIsPureRotation) {
    dg::SearchParams p = dg::make_params(128, 2, 0.0);
    dg::BlochState s = dg::initial_state(p);
    for (int t = 1; t <= 50; ++t) {
        s = dg::iterate_once(s, p);
        double angle = (2.0 * t + 1.0) * p.theta;
        EXPECT_NEAR(s.x, std::sin(angle), 1e-12) << "t=" << t;
        EXPECT_NEAR(s.z, std::cos(angle), 1e-12) << "t=" << t;
    }
}

TEST(BlochTest, FullDampingForgetsTheInput) {
    std::mt19937 rng(17);
    dg::SearchParams p = dg::make_params(64, 3, 1.0);
    for (int i = 0; i < 20; ++i) {
        dg::BlochState s = dg::iterate_once(random_physical_state(rng), p);
        EXPECT_NEAR(s.x, p.sin_two_theta(), 1e-15);
        EXPECT_NEAR(s.z, p.cos_two_theta(), 1e-15);
    }
}

TEST(BlochTest, NoiselessNormIsConserved) {
    dg::SearchParams p = dg::make_params(512, 2, 0.0);
    dg::BlochState s = dg::initial_state(p);
    for (int t = 0; t < 1000; ++t) {
        s = dg::iterate_once(s, p);
    }
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
}

TEST(BlochTest, ContractsToTheFixedPoint) {
    for (double gamma : {0.01, 0.05, 0.3, 0.9}) {
        dg::SearchParams p = dg::make_params(128, 2, gamma);
        dg::BlochState fixed = dg::fixed_point(p);
        dg::BlochState s = dg::initial_state(p);
        for (int t = 0; t < 10000; ++t) {
            s = dg::iterate_once(s, p);
        }
        EXPECT_LT(std::hypot(s.x - fixed.x, s.z - fixed.z), 1e-8) << "gamma=" << gamma;
    }
}

TEST(TrajectoryTest, SinglePointAtZeroSteps) {
    dg::SearchParams p = dg::make_params(128, 2, 0.3);
    auto points = dg::run_trajectory(p, 0);
    ASSERT_EQ(points.size(), 1u);
    EXPECT_EQ(points[0].t, 0u);
    EXPECT_NEAR(points[0].p_suc, 2.0 / 128.0, 1e-15);
}

TEST(TrajectoryTest, FieldsMatchAnalyticsRecomputation) {
    dg::SearchParams p = dg::make_params(128, 2, 0.05);
    auto points = dg::run_trajectory(p, 100);
    ASSERT_EQ(points.size(), 101u);
    for (const auto &point : points) {
        EXPECT_EQ(point.p_suc, dg::success_probability(point.state));
        EXPECT_EQ(point.s1, dg::von_neumann_entropy(point.state));
        EXPECT_EQ(point.c1, dg::coherence_relative_entropy(point.state, p));
    }
}

TEST(TrajectoryTest, NoiselessPointMatchesClosedForm) {
    dg::SearchParams p = dg::make_params(128, 2, 0.0);
    auto points = dg::run_trajectory(p, 6);
    double expected = std::sin(13.0 * p.theta / 2.0);
    EXPECT_NEAR(points[6].p_suc, expected * expected, 1e-12);
}

TEST(TrajectoryTest, ApproachesAsymptote) {
    dg::SearchParams p = dg::make_params(128, 2, 0.01);
    auto points = dg::run_trajectory(p, 10000);
    EXPECT_NEAR(points.back().p_suc, dg::asymptotic_success(p), 1e-6);
}

TEST(TrajectoryTest, EnforcesStepCap) {
    dg::SearchParams p = dg::make_params(128, 2, 0.0);
    EXPECT_THROW(dg::run_trajectory(p, dg::k_default_step_cap + 1), std::length_error);
    EXPECT_THROW(dg::run_trajectory(p, 11, 10), std::length_error);
    EXPECT_EQ(dg::run_trajectory(p, 10, 10).size(), 11u);
}
