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

#include "diffint/engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "diffint/errors.hpp"
#include "diffint/fft.hpp"

namespace diffint {

namespace {

constexpr double kPi = std::numbers::pi;

// A Hermitian multiplier on a real signal must give a real signal; imaginary
// content beyond this bound means the multiplier lost its symmetry.
constexpr double kResidualRel = 1e-8;

void check_finite(const std::vector<double>& values, const char* what) {
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(what) + ": samples must be finite");
}

void validate_params(const DiffintParams& p) {
    if (!std::isfinite(p.q)) throw std::invalid_argument("diffint: q must be finite");
    if (p.mode == Mode::feller && !(p.theta >= 0.0 && p.theta <= 1.0))
        throw std::invalid_argument("diffint: theta must lie in [0, 1]");
}

double physical_factor(const DiffintParams& p, std::optional<double> signal_rate) {
    if (p.scale == Scale::normalized) return 1.0;
    double fs = p.sample_rate > 0.0 ? p.sample_rate : signal_rate.value_or(0.0);
    if (fs <= 0.0)
        throw std::invalid_argument("diffint: physical scaling requires a sample rate");
    return std::pow(kPi * fs, p.q);
}

struct ApplyResult {
    std::vector<double> out;
    double residual_rel = 0.0;
};

// Shared 1-D/2-D core: transform, multiply bin-wise, inverse-transform, and
// verify the imaginary part is roundoff before discarding it. When the true
// output is (near) zero the relative test is meaningless, so a floor scaled
// by the multiplier gain and input level covers FFT roundoff on annihilated
// signals.
ApplyResult apply_multiplier(const std::vector<double>& input, const Multiplier& mult,
                             std::size_t nx, std::size_t ny, double post_scale) {
    const std::size_t n = input.size();
    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = input[i];

    if (ny == 0)
        fft::forward(buf);
    else
        fft::forward_2d(buf, nx, ny);

    double max_h = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        buf[i] *= mult.values[i];
        max_h = std::max(max_h, std::abs(mult.values[i]));
    }

    if (ny == 0)
        fft::inverse(buf);
    else
        fft::inverse_2d(buf, nx, ny);

    double sum_re = 0.0, sum_im = 0.0, sum_in = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_re += buf[i].real() * buf[i].real();
        sum_im += buf[i].imag() * buf[i].imag();
        sum_in += input[i] * input[i];
    }
    const double rms_re = std::sqrt(sum_re / static_cast<double>(n));
    const double rms_im = std::sqrt(sum_im / static_cast<double>(n));
    const double rms_in = std::sqrt(sum_in / static_cast<double>(n));

    const double eps = std::numeric_limits<double>::epsilon();
    const double zero_floor =
        64.0 * eps * (1.0 + max_h) * (1.0 + std::log2(static_cast<double>(n))) * rms_in;
    if (rms_im > kResidualRel * rms_re && rms_im > zero_floor)
        throw EngineError("diffint: multiplier symmetry violation (imaginary residual " +
                          std::to_string(rms_im) + " vs output RMS " +
                          std::to_string(rms_re) + ")");

    ApplyResult r;
    r.residual_rel = rms_re > 0.0 ? rms_im / rms_re : 0.0;
    r.out.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.out[i] = buf[i].real() * post_scale;
    return r;
}

} // namespace

Signal1D differintegrate_1d(const Signal1D& signal, const DiffintParams& params,
                            double& imag_residual_rel) {
    validate_params(params);
    if (signal.samples.size() < 2)
        throw std::invalid_argument("differintegrate_1d: need at least 2 samples");
    check_finite(signal.samples, "differintegrate_1d");

    const auto grid = frequency_grid(signal.samples.size());
    const Multiplier mult = diffint_multiplier(grid, params);
    auto r = apply_multiplier(signal.samples, mult, signal.samples.size(), 0,
                              physical_factor(params, signal.sample_rate));
    imag_residual_rel = r.residual_rel;
    return {std::move(r.out), signal.sample_rate};
}

Signal1D differintegrate_1d(const Signal1D& signal, const DiffintParams& params) {
    double residual = 0.0;
    return differintegrate_1d(signal, params, residual);
}

Channel2D differintegrate_2d(const Channel2D& channel, const DiffintParams& params,
                             double& imag_residual_rel) {
    validate_params(params);
    if (channel.width < 2 || channel.height < 2)
        throw std::invalid_argument("differintegrate_2d: width and height must be >= 2");
    if (channel.values.size() != channel.width * channel.height)
        throw std::invalid_argument("differintegrate_2d: value buffer does not match shape");
    check_finite(channel.values, "differintegrate_2d");

    const auto grid = frequency_grid_2d(channel.width, channel.height);
    const Multiplier mult = diffint_multiplier(grid, params);
    auto r = apply_multiplier(channel.values, mult, channel.width, channel.height,
                              physical_factor(params, std::nullopt));
    imag_residual_rel = r.residual_rel;
    return {channel.width, channel.height, std::move(r.out)};
}

Channel2D differintegrate_2d(const Channel2D& channel, const DiffintParams& params) {
    double residual = 0.0;
    return differintegrate_2d(channel, params, residual);
}

Signal1D apply_window(const Signal1D& signal, WindowKind kind) {
    if (signal.samples.size() < 2)
        throw std::invalid_argument("apply_window: need at least 2 samples");
    if (kind == WindowKind::none) return signal;

    const std::size_t n = signal.samples.size();
    Signal1D out{std::vector<double>(n), signal.sample_rate};
    for (std::size_t k = 0; k < n; ++k) {
        const double w =
            0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(k) /
                                  static_cast<double>(n - 1)));
        out.samples[k] = signal.samples[k] * w;
    }
    return out;
}

} // namespace diffint
