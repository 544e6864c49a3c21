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
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "damped_grover/bloch.hpp"
#include "damped_grover/search_params.hpp"

namespace damped_grover {

/// Discriminant band, scaled by (1 + wamma)^2, inside which the two
/// eigenvalues are treated as confluent and closed forms are refused.
inline constexpr double k_degenerate_band_tol = 1e-10;

/// Budget for algebraic identities (Vieta relations, decompositions).
inline constexpr double k_algebraic_tol = 1e-12;

/// Relative agreement required between the closed form and the iterated
/// recursion.
inline constexpr double k_closed_form_rel_tol = 1e-9;

enum class Regime {
    trigonometric,
    hyperbolic,
    degenerate,
};

/// Closed-form evaluation was requested inside the degenerate eigenvalue
/// band; the caller must fall back to the iterative engine, which is exact
/// there.
struct degenerate_regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Eigenstructure of the homogeneous part of the iteration map. The
/// eigenvalues solve lambda^2 - (1+w) cos2theta lambda + w = 0 with
/// w = wamma.
///
/// angle holds phi = arg(lambda_plus) in the trigonometric regime, and
/// acosh(|lambda_plus + lambda_minus| / (2 sqrt(w))) in the hyperbolic
/// regime (+infinity once w = 0). It is NaN and meaningless in the
/// degenerate band.
struct SpectralData {
    std::complex<double> lambda_plus;
    std::complex<double> lambda_minus;
    Regime regime;
    double angle;
    double discriminant;
};

inline SpectralData spectral_data(const SearchParams &params) {
    double w = params.wamma;
    double trace = (1.0 + w) * params.cos_two_theta();
    double disc = trace * trace - 4.0 * w;
    double band = k_degenerate_band_tol * (1.0 + w) * (1.0 + w);
    SpectralData out;
    out.discriminant = disc;
    if (disc < -band) {
        double root = std::sqrt(-disc);
        out.lambda_plus = std::complex<double>{trace * 0.5, root * 0.5};
        out.lambda_minus = std::conj(out.lambda_plus);
        out.regime = Regime::trigonometric;
        out.angle = std::atan2(root, trace);
    } else if (disc > band) {
        double root = std::sqrt(disc);
        out.lambda_plus = std::complex<double>{(trace + root) * 0.5, 0.0};
        out.lambda_minus = std::complex<double>{(trace - root) * 0.5, 0.0};
        out.regime = Regime::hyperbolic;
        out.angle = w > 0.0
                        ? std::acosh(std::max(1.0, std::abs(trace) / (2.0 * std::sqrt(w))))
                        : std::numeric_limits<double>::infinity();
    } else {
        out.lambda_plus = std::complex<double>{trace * 0.5, 0.0};
        out.lambda_minus = out.lambda_plus;
        out.regime = Regime::degenerate;
        out.angle = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

/// Chebyshev polynomial of the second kind U_t(xi), t >= -1 with U_{-1} = 0.
/// Uses the trigonometric form on [-1, 1], the hyperbolic form for xi > 1,
/// and the parity relation U_t(-xi) = (-1)^t U_t(xi) for xi < -1.
inline double chebyshev_u(std::int64_t t, double xi) {
    if (t < -1) {
        throw std::invalid_argument("chebyshev_u requires t >= -1, got " + std::to_string(t));
    }
    if (t == -1) {
        return 0.0;
    }
    double order = static_cast<double>(t);
    if (xi < -1.0) {
        double mirrored = chebyshev_u(t, -xi);
        return (t % 2 == 0) ? mirrored : -mirrored;
    }
    if (xi == -1.0) {
        return (t % 2 == 0) ? order + 1.0 : -(order + 1.0);
    }
    if (xi == 1.0) {
        return order + 1.0;
    }
    if (xi > 1.0) {
        double phi = std::acosh(xi);
        return std::sinh((order + 1.0) * phi) / std::sinh(phi);
    }
    double phi = std::acos(xi);
    return std::sin((order + 1.0) * phi) / std::sin(phi);
}

/// f_a(xi) = 1 - a (xi + xi^2) + xi^3, the determinant of I - xi M as a
/// function of a = cos2theta and xi = wamma. Strictly positive for a < 1 and
/// xi in [0, 1].
inline double fixed_point_determinant(double a, double xi) {
    return 1.0 - a * (xi + xi * xi) + xi * xi * xi;
}

/// det(I - wamma M) = 1 - (w + w^2) cos2theta + w^3.
inline double determinant(const SearchParams &params) {
    return fixed_point_determinant(params.cos_two_theta(), params.wamma);
}

/// Location xi_+(a) = (a + sqrt(3a + a^2)) / 3 of the interior minimum of
/// f_a on [0, 1], defined for a in (0, 1]. f_a'(xi) changes sign from
/// negative to positive there, and f_1(xi_+(1)) = 0 is the excluded
/// boundary case a = 1.
inline double critical_point(double a) {
    if (!(a > 0.0 && a <= 1.0)) {
        throw std::domain_error("critical_point requires 0 < a <= 1, got " + std::to_string(a));
    }
    return (a + std::sqrt(3.0 * a + a * a)) / 3.0;
}

/// Unique fixed point of the iteration map,
/// (1 - w^2) / det(I - w M) * (sin2theta, cos2theta - w).
/// At gamma = 0 the inhomogeneous term vanishes and the result is (0, 0).
inline BlochState fixed_point(const SearchParams &params) {
    double det = determinant(params);
    if (det <= 0.0) {
        throw std::runtime_error(
            "fixed-point determinant must be positive, got " + std::to_string(det));
    }
    double scale = (1.0 - params.wamma * params.wamma) / det;
    return BlochState{scale * params.sin_two_theta(),
                      scale * (params.cos_two_theta() - params.wamma)};
}

/// Deviation s(t) = r(t) - r_fixed of the state from the fixed point.
struct TransientComponent {
    double s_x;
    double s_z;
    std::uint64_t t;
};

/// s(0) = r(0) - fixed_point(params), the seed for closed_form_transient.
inline TransientComponent initial_transient(const SearchParams &params) {
    BlochState start = initial_state(params);
    BlochState fix = fixed_point(params);
    return TransientComponent{start.x - fix.x, start.z - fix.z, 0};
}

namespace detail {

// Binary exponentiation; std::pow on complex bases mishandles zero bases
// with large exponents.
inline std::complex<double> int_pow(std::complex<double> base, std::uint64_t exponent) {
    std::complex<double> out{1.0, 0.0};
    while (exponent != 0) {
        if (exponent & 1u) {
            out *= base;
        }
        base *= base;
        exponent >>= 1u;
    }
    return out;
}

}  // namespace detail

/// Evaluates the transient after t iterations from the seed component s0
/// (taken at iteration 0) through the eigenvalue decomposition. Powers are
/// formed from the combined factors wamma * lambda_{+-}, whose moduli never
/// exceed 1, so no intermediate overflows even for huge t. The imaginary
/// residue of the complex evaluation is below 1e-10 and is truncated.
///
/// Throws degenerate_regime_error inside the confluent eigenvalue band,
/// where the decomposition breaks down; the iterative engine is exact there.
inline TransientComponent closed_form_transient(const SearchParams &params,
                                                const TransientComponent &s0,
                                                std::uint64_t t) {
    if (t == 0) {
        return TransientComponent{s0.s_x, s0.s_z, 0};
    }
    SpectralData spec = spectral_data(params);
    if (spec.regime == Regime::degenerate) {
        throw degenerate_regime_error(
            "eigenvalues are confluent (discriminant " + std::to_string(spec.discriminant) +
            "); no closed form, use the iterative engine");
    }
    double w = params.wamma;
    double c2 = params.cos_two_theta();
    double s2 = params.sin_two_theta();
    std::complex<double> lp = spec.lambda_plus;
    std::complex<double> lm = spec.lambda_minus;
    std::complex<double> denom = lm - lp;
    std::complex<double> pow_p = detail::int_pow(w * lp, t);
    std::complex<double> pow_m = detail::int_pow(w * lm, t);
    std::complex<double> pow_p_prev = detail::int_pow(w * lp, t - 1);
    std::complex<double> pow_m_prev = detail::int_pow(w * lm, t - 1);
    std::complex<double> sx =
        (w * (pow_p - pow_m) * (s0.s_x * c2 - s0.s_z * s2) - (lp * pow_p - lm * pow_m) * s0.s_x) /
        denom;
    std::complex<double> sz =
        ((pow_p - pow_m) * (s0.s_x * s2 - s0.s_z * w * c2) +
         (w * w) * (pow_p_prev - pow_m_prev) * s0.s_z) /
        denom;
    return TransientComponent{sx.real(), sz.real(), t};
}

/// Closed-form state fixed_point + transient at iteration t.
inline BlochState closed_form_state(const SearchParams &params, std::uint64_t t) {
    BlochState fix = fixed_point(params);
    TransientComponent s = closed_form_transient(params, initial_transient(params), t);
    return BlochState{fix.x + s.s_x, fix.z + s.s_z};
}

/// lim_{t -> inf} P_suc(t) = 1/2 + (1 - w^2)(w - cos2theta) / (2 det).
/// Defined only for gamma > 0; at gamma = 0 the dynamics oscillates forever
/// and no limit exists.
inline double asymptotic_success(const SearchParams &params) {
    if (params.gamma <= 0.0) {
        throw std::domain_error(
            "asymptotic success probability is undefined at gamma = 0; the noiseless dynamics "
            "oscillates forever");
    }
    double w = params.wamma;
    return 0.5 +
           (1.0 - w * w) * (w - params.cos_two_theta()) / (2.0 * determinant(params));
}

}  // namespace damped_grover
