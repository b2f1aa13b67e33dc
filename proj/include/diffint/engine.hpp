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

#ifndef DIFFINT_ENGINE_HPP
#define DIFFINT_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "diffint/spectral.hpp"

namespace diffint {

/// A real-valued sample sequence with an optional physical sample rate.
struct Signal1D {
    std::vector<double> samples;
    std::optional<double> sample_rate;  ///< Hz
};

/// One real-valued image plane, row-major.
struct Channel2D {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> values;

    double at(std::size_t x, std::size_t y) const { return values[y * width + x]; }
    double& at(std::size_t x, std::size_t y) { return values[y * width + x]; }
};

enum class WindowKind { none, hann };

/// Fractional derivative/integral of a 1-D signal: forward DFT, multiply by
/// the differintegral multiplier, inverse DFT. Input is treated as one period
/// of a periodic signal. Throws EngineError if the output's imaginary residual
/// exceeds the symmetry threshold (which would indicate a multiplier bug).
Signal1D differintegrate_1d(const Signal1D& signal, const DiffintParams& params);

/// As above, also reporting the relative imaginary residual that was discarded.
Signal1D differintegrate_1d(const Signal1D& signal, const DiffintParams& params,
                            double& imag_residual_rel);

/// 2-D differintegral of one channel via the radial multiplier (riesz) or the
/// axis-skewed Feller variant.
Channel2D differintegrate_2d(const Channel2D& channel, const DiffintParams& params);
Channel2D differintegrate_2d(const Channel2D& channel, const DiffintParams& params,
                             double& imag_residual_rel);

/// Taper toward zero at both ends; the non-periodic edge artifact remedy.
/// hann: w_k = 0.5 (1 - cos(2 pi k / (n-1))), endpoints exactly 0.
Signal1D apply_window(const Signal1D& signal, WindowKind kind);

} // namespace diffint

#endif // DIFFINT_ENGINE_HPP
