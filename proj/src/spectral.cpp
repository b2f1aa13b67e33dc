// Copyright 2026 The diffint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diffint/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diffint {

namespace {

constexpr double kPi = std::numbers::pi;

// Orders within this distance of a trig zero are treated as degenerate, and
// skews within it of 0 or 1 switch to the closed-form special cases.
constexpr double kDegenerateEps = 1e-9;

std::vector<double> axis_frequencies(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = (k <= n / 2) ? 2.0 * static_cast<double>(k) / static_cast<double>(n)
                            : 2.0 * (static_cast<double>(k) - static_cast<double>(n)) /
                                  static_cast<double>(n);
    }
    return v;
}

// Sign of the axis frequency used for the odd part of a Feller multiplier.
// The shared +-1 Nyquist bin of an even-length axis has no well-defined sign.
int axis_sign(const std::vector<double>& axis, std::size_t k) {
    if (axis.size() % 2 == 0 && k == axis.size() / 2) return 0;
    double w = axis[k];
    return (w > 0.0) ? 1 : (w < 0.0 ? -1 : 0);
}

double dc_value(DcPolicy policy, double q) {
    if (policy == DcPolicy::identity_at_q0) return 1.0;
    return q == 0.0 ? 1.0 : 0.0;
}

Multiplier identity_multiplier(const FrequencyGrid& grid) {
    Multiplier m;
    if (grid.is_2d()) {
        m.shape = {grid.ny(), grid.nx()};
        m.values.assign(grid.nx() * grid.ny(), {1.0, 0.0});
    } else {
        m.shape = {grid.nx()};
        m.values.assign(grid.nx(), {1.0, 0.0});
    }
    return m;
}

// c1 (jw)^q + c2 (-jw)^q split into even and odd parts:
//   mag^q [ (c1+c2) cos(q pi/2) + j s (c1-c2) sin(q pi/2) ],  s = sgn(w_axis).
// s = 0 keeps the even part alone, which is what the sign-less bins get.
std::complex<double> feller_bin(double magnitude, int sign, double q,
                                const FellerCoefficients& c) {
    const double mag_q = std::pow(magnitude, q);
    const double half = 0.5 * kPi * q;
    const double even = (c.c1 + c.c2) * std::cos(half);
    const double odd = (c.c1 - c.c2) * std::sin(half) * static_cast<double>(sign);
    return {mag_q * even, mag_q * odd};
}

} // namespace

double FrequencyGrid::radial(std::size_t kx, std::size_t ky) const {
    return std::hypot(axis_x[kx], axis_y[ky]);
}

FrequencyGrid frequency_grid(std::size_t n, int dims) {
    if (n < 2) throw std::invalid_argument("frequency_grid: axis length must be >= 2");
    if (dims != 1 && dims != 2)
        throw std::invalid_argument("frequency_grid: dims must be 1 or 2");
    FrequencyGrid g;
    g.axis_x = axis_frequencies(n);
    if (dims == 2) g.axis_y = g.axis_x;
    return g;
}

FrequencyGrid frequency_grid_2d(std::size_t nx, std::size_t ny) {
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("frequency_grid_2d: axis lengths must be >= 2");
    FrequencyGrid g;
    g.axis_x = axis_frequencies(nx);
    g.axis_y = axis_frequencies(ny);
    return g;
}

std::complex<double> signed_power(double omega, double q, int sign_j) {
    if (sign_j != 1 && sign_j != -1)
        throw std::invalid_argument("signed_power: sign_j must be +1 or -1");
    if (!std::isfinite(omega) || !std::isfinite(q))
        throw std::invalid_argument("signed_power: inputs must be finite");
    if (omega == 0.0) {
        if (q < 0.0)
            throw std::domain_error(
                "signed_power: |0|^q is singular for q < 0; apply a DC policy");
        return {q == 0.0 ? 1.0 : 0.0, 0.0};
    }
    const double mag = std::pow(std::abs(omega), q);
    const double sgn = omega > 0.0 ? 1.0 : -1.0;
    return std::polar(mag, static_cast<double>(sign_j) * sgn * 0.5 * kPi * q);
}

FellerCoefficients feller_coefficients(double theta, double q) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::invalid_argument("feller_coefficients: theta must lie in [0, 1]");
    if (!std::isfinite(q))
        throw std::invalid_argument("feller_coefficients: q must be finite");

    const double half = 0.5 * kPi * q;
    const double sin_pi_theta = std::sin(kPi * theta);
    if (std::abs(sin_pi_theta) < kDegenerateEps) {
        if (theta < 0.5) {
            // theta = 0: c1 = c2 = -1/(2 cos(q pi/2)), undefined at odd q.
            const double c = std::cos(half);
            if (std::abs(c) < kDegenerateEps)
                throw std::domain_error(
                    "feller_coefficients: degenerate order (cos(q pi/2) = 0 at theta = 0)");
            const double v = -1.0 / (2.0 * c);
            return {v, v};
        }
        // theta = 1: c1 = -c2 = -1/(2 sin(q pi/2)), undefined at even q.
        const double s = std::sin(half);
        if (std::abs(s) < kDegenerateEps)
            throw std::domain_error(
                "feller_coefficients: degenerate order (sin(q pi/2) = 0 at theta = 1)");
        const double v = -1.0 / (2.0 * s);
        return {v, -v};
    }
    return {-std::sin((q + theta) * 0.5 * kPi) / sin_pi_theta,
            -std::sin((q - theta) * 0.5 * kPi) / sin_pi_theta};
}

Multiplier riesz_multiplier(const FrequencyGrid& grid, double q, DcPolicy dc_policy) {
    if (!std::isfinite(q)) throw std::invalid_argument("riesz_multiplier: q must be finite");
    if (q == 0.0) return identity_multiplier(grid);

    Multiplier m;
    if (grid.is_2d()) {
        const std::size_t nx = grid.nx(), ny = grid.ny();
        m.shape = {ny, nx};
        m.values.resize(nx * ny);
        for (std::size_t ky = 0; ky < ny; ++ky)
            for (std::size_t kx = 0; kx < nx; ++kx) {
                if (kx == 0 && ky == 0) {
                    m.values[0] = {dc_value(dc_policy, q), 0.0};
                    continue;
                }
                m.values[ky * nx + kx] = {std::pow(grid.radial(kx, ky), q), 0.0};
            }
    } else {
        const std::size_t n = grid.nx();
        m.shape = {n};
        m.values.resize(n);
        m.values[0] = {dc_value(dc_policy, q), 0.0};
        for (std::size_t k = 1; k < n; ++k)
            m.values[k] = {std::pow(std::abs(grid.axis_x[k]), q), 0.0};
    }
    return m;
}

Multiplier feller_multiplier(const FrequencyGrid& grid, double q, double theta,
                             DcPolicy dc_policy, Axis axis) {
    if (!std::isfinite(q)) throw std::invalid_argument("feller_multiplier: q must be finite");
    // The printed coefficients give c1 + c2 = 0 at q = 0 (a zero operator);
    // the order-zero operator is required to be the identity in every mode.
    if (q == 0.0) return identity_multiplier(grid);

    const FellerCoefficients c = feller_coefficients(theta, q);

    Multiplier m;
    if (grid.is_2d()) {
        const std::size_t nx = grid.nx(), ny = grid.ny();
        const auto& sign_axis = (axis == Axis::horizontal) ? grid.axis_x : grid.axis_y;
        m.shape = {ny, nx};
        m.values.resize(nx * ny);
        for (std::size_t ky = 0; ky < ny; ++ky)
            for (std::size_t kx = 0; kx < nx; ++kx) {
                if (kx == 0 && ky == 0) {
                    m.values[0] = {dc_value(dc_policy, q), 0.0};
                    continue;
                }
                const std::size_t ks = (axis == Axis::horizontal) ? kx : ky;
                m.values[ky * nx + kx] =
                    feller_bin(grid.radial(kx, ky), axis_sign(sign_axis, ks), q, c);
            }
    } else {
        const std::size_t n = grid.nx();
        m.shape = {n};
        m.values.resize(n);
        m.values[0] = {dc_value(dc_policy, q), 0.0};
        for (std::size_t k = 1; k < n; ++k)
            m.values[k] =
                feller_bin(std::abs(grid.axis_x[k]), axis_sign(grid.axis_x, k), q, c);
    }
    return m;
}

Multiplier diffint_multiplier(const FrequencyGrid& grid, const DiffintParams& params) {
    if (params.mode == Mode::riesz)
        return riesz_multiplier(grid, params.q, params.dc_policy);
    return feller_multiplier(grid, params.q, params.theta, params.dc_policy, params.axis);
}

double gamma_function(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("gamma_function: x must be finite");
    if (x == std::floor(x) && x <= 0.0)
        throw std::domain_error("gamma_function: pole at nonpositive integer " +
                                std::to_string(x));
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return kPi / (std::sin(kPi * x) * gamma_function(1.0 - x));
    }
    // Lanczos, g = 7, 9 terms.
    static constexpr double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
    };
    const double z = x - 1.0;
    double acc = coef[0];
    for (int i = 1; i < 9; ++i) acc += coef[i] / (z + static_cast<double>(i));
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

double generalized_binomial(double q, unsigned k) {
    double result = 1.0;
    for (unsigned i = 1; i <= k; ++i)
        result *= (q - static_cast<double>(i) + 1.0) / static_cast<double>(i);
    return result;
}

} // namespace diffint
