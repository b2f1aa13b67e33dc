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

#include "diffint/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diffint {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::complex<double>> unit_roots(std::size_t n, double sign) {
    std::vector<std::complex<double>> roots(n);
    for (std::size_t m = 0; m < n; ++m)
        roots[m] = std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(m) /
                                       static_cast<double>(n));
    return roots;
}

} // namespace

std::vector<std::complex<double>> direct_dft(std::span<const std::complex<double>> samples) {
    const std::size_t n = samples.size();
    if (n < 2) throw std::invalid_argument("direct_dft: need at least 2 samples");
    const auto roots = unit_roots(n, -1.0);
    std::vector<std::complex<double>> spectrum(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) acc += samples[m] * roots[(k * m) % n];
        spectrum[k] = acc;
    }
    return spectrum;
}

std::vector<std::complex<double>> direct_dft(std::span<const double> samples) {
    std::vector<std::complex<double>> c(samples.begin(), samples.end());
    return direct_dft(std::span<const std::complex<double>>(c));
}

Signal1D convolution_apply(const Signal1D& signal, const Multiplier& multiplier) {
    const std::size_t n = signal.samples.size();
    if (multiplier.shape.size() != 1 || multiplier.size() != n)
        throw std::invalid_argument("convolution_apply: multiplier/signal length mismatch");

    // h = inverse DFT of H, direct summation.
    const auto roots = unit_roots(n, +1.0);
    std::vector<std::complex<double>> h(n);
    for (std::size_t m = 0; m < n; ++m) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) acc += multiplier.values[k] * roots[(k * m) % n];
        h[m] = acc / static_cast<double>(n);
    }

    // y_t = sum_m h_m f_{(t-m) mod n}
    Signal1D out{std::vector<double>(n), signal.sample_rate};
    for (std::size_t t = 0; t < n; ++t) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m)
            acc += h[m] * signal.samples[(t + n - m) % n];
        out.samples[t] = acc.real();
    }
    return out;
}

std::vector<double> rl_riesz_integral_quadrature(std::span<const double> f,
                                                 const QuadratureConfig& config) {
    if (!(config.q > 0.0 && config.q < 1.0))
        throw std::domain_error("rl_riesz_integral_quadrature: order must lie in (0, 1)");
    if (config.n_points != f.size() || f.size() < 4)
        throw std::invalid_argument("rl_riesz_integral_quadrature: bad sample count");
    if (!(config.b > config.a))
        throw std::invalid_argument("rl_riesz_integral_quadrature: empty support");

    const std::size_t n = f.size();
    const double q = config.q;
    const double h = (config.b - config.a) / static_cast<double>(n);

    // Kernel antiderivative tables at the cell boundaries: u^q and u^{q+1} at
    // u = m h. With samples and evaluation points on the same uniform grid,
    // every cell boundary distance is a multiple of h.
    std::vector<double> pw_q(n + 1), pw_q1(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        const double u = static_cast<double>(m) * h;
        pw_q[m] = std::pow(u, q);
        pw_q1[m] = std::pow(u, q + 1.0);
    }

    const double norm = 1.0 / (2.0 * gamma_function(q) * std::cos(0.5 * kPi * q));

    // Per cell [t_i, t_{i+1}] with g linear (alpha + beta (tau - t_i)):
    //   left of t_j  (u = t_j - tau): int u^{q-1} [(alpha + beta (j-i) h) - beta u] du
    //   right of t_j (u = tau - t_j): int u^{q-1} [(alpha - beta (i-j) h) + beta u] du
    // Both reduce to the tabulated u^q / q and u^{q+1} / (q+1) terms, finite
    // down to u = 0, so the cells touching t_j need no special casing beyond
    // the analytic antiderivative.
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double alpha = f[i];
            const double beta = (f[i + 1] - f[i]) / h;
            if (i + 1 <= j) {
                const std::size_t dlo = j - i - 1, dhi = j - i;
                const double dq = (pw_q[dhi] - pw_q[dlo]) / q;
                const double dq1 = (pw_q1[dhi] - pw_q1[dlo]) / (q + 1.0);
                acc += (alpha + beta * static_cast<double>(dhi) * h) * dq - beta * dq1;
            } else {
                const std::size_t dlo = i - j, dhi = i - j + 1;
                const double dq = (pw_q[dhi] - pw_q[dlo]) / q;
                const double dq1 = (pw_q1[dhi] - pw_q1[dlo]) / (q + 1.0);
                acc += (alpha - beta * static_cast<double>(dlo) * h) * dq + beta * dq1;
            }
        }
        out[j] = norm * acc;
    }
    return out;
}

SinusoidPair analytic_sinusoid(Mode mode, double q, double theta, std::size_t bin,
                               std::size_t n) {
    if (n < 4 || bin < 1 || 2 * bin >= n)
        throw std::invalid_argument("analytic_sinusoid: need 1 <= bin < n/2");

    const double omega = 2.0 * static_cast<double>(bin) / static_cast<double>(n);
    const double mag = std::pow(omega, q);

    // H at the +bin: A + jB. The conjugate bin carries A - jB, so the real
    // signal cos(wt) maps to A cos(wt) - B sin(wt).
    double a = 0.0, b = 0.0;
    if (mode == Mode::riesz || q == 0.0) {
        a = (q == 0.0) ? 1.0 : mag;
    } else {
        // Coefficients written out here on purpose; this path must not lean
        // on the multiplier construction it is used to check.
        double c1 = 0.0, c2 = 0.0;
        const double half = 0.5 * kPi * q;
        if (theta < 1e-9) {
            c1 = c2 = -1.0 / (2.0 * std::cos(half));
        } else if (theta > 1.0 - 1e-9) {
            c1 = -1.0 / (2.0 * std::sin(half));
            c2 = -c1;
        } else {
            c1 = -std::sin((q + theta) * 0.5 * kPi) / std::sin(kPi * theta);
            c2 = -std::sin((q - theta) * 0.5 * kPi) / std::sin(kPi * theta);
        }
        a = mag * (c1 + c2) * std::cos(half);
        b = mag * (c1 - c2) * std::sin(half);
    }

    SinusoidPair pair;
    pair.input.samples.resize(n);
    pair.expected.samples.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double phase = 2.0 * kPi * static_cast<double>(bin) * static_cast<double>(t) /
                             static_cast<double>(n);
        pair.input.samples[t] = std::cos(phase);
        pair.expected.samples[t] = a * std::cos(phase) - b * std::sin(phase);
    }
    return pair;
}

Signal1D finite_difference_derivative(const Signal1D& signal) {
    const std::size_t n = signal.samples.size();
    if (n < 3) throw std::invalid_argument("finite_difference_derivative: need >= 3 samples");
    const double dt = signal.sample_rate ? 1.0 / *signal.sample_rate
                                         : 2.0 / static_cast<double>(n);
    Signal1D out{std::vector<double>(n), signal.sample_rate};
    for (std::size_t k = 0; k < n; ++k) {
        const double next = signal.samples[(k + 1) % n];
        const double prev = signal.samples[(k + n - 1) % n];
        out.samples[k] = (next - prev) / (2.0 * dt);
    }
    return out;
}

} // namespace diffint
