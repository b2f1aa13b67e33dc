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

#ifndef DIFFINT_ORACLES_HPP
#define DIFFINT_ORACLES_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "diffint/engine.hpp"
#include "diffint/spectral.hpp"

// Slow-but-sure reference implementations used to validate the engine. None
// of these share the FFT path; that independence is the point.

namespace diffint {

/// O(n^2) DFT by direct summation: X_k = sum_m f_m e^{-j 2 pi k m / n}.
std::vector<std::complex<double>> direct_dft(std::span<const double> samples);
std::vector<std::complex<double>> direct_dft(std::span<const std::complex<double>> samples);

/// Applies a multiplier the long way round: impulse response h = IDFT(H) by
/// direct summation, then O(n^2) circular convolution with the signal.
Signal1D convolution_apply(const Signal1D& signal, const Multiplier& multiplier);

struct QuadratureConfig {
    double q = 0.5;        ///< integral order, must lie in (0, 1)
    double a = 0.0;        ///< support interval start
    double b = 1.0;        ///< support interval end
    std::size_t n_points = 0;
};

/// Two-sided Riemann-Liouville (Riesz) fractional integral
///   D^{-q} g (t) = 1/(2 Gamma(q) cos(q pi/2)) * integral |t - tau|^{q-1} g(tau) dtau
/// computed against the piecewise-linear interpolant of the samples, with the
/// singular cells around tau = t integrated analytically. Ground truth for
/// the engine's riesz q < 0 path on compactly supported pulses.
std::vector<double> rl_riesz_integral_quadrature(std::span<const double> f,
                                                 const QuadratureConfig& config);

struct SinusoidPair {
    Signal1D input;     ///< cos(2 pi bin t / n)
    Signal1D expected;  ///< closed-form differintegral of the input
};

/// Analytic eigenfunction oracle: a single-bin cosine is mapped by H at that
/// bin, worked out by hand once (riesz: scaled cosine; feller: cos/sin mix
/// from the even/odd parts of the multiplier). Requires 1 <= bin < n/2.
SinusoidPair analytic_sinusoid(Mode mode, double q, double theta, std::size_t bin,
                               std::size_t n);

/// Periodic central difference (f_{k+1} - f_{k-1}) / (2 dt) with
/// dt = 1/sample_rate, or 2/n when the signal carries no rate.
Signal1D finite_difference_derivative(const Signal1D& signal);

} // namespace diffint

#endif // DIFFINT_ORACLES_HPP
