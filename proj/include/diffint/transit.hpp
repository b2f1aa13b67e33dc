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

#ifndef DIFFINT_TRANSIT_HPP
#define DIFFINT_TRANSIT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>

#include "diffint/engine.hpp"

namespace diffint {

/// Geometry of a synthetic equatorial exoplanet transit. The light curve is
/// baseline 1, an ingress following the eclipsed-area law
///   A(t) = (R^2/2)(phi - sin phi),  phi = 2 arccos(1 - v t / R),
/// relative brightness 1 - A/(pi Rs^2), a flat minimum 1 - (R/Rs)^2, and the
/// mirrored egress. The demo defaults place the two inflection points at
/// exactly T/4 and 3T/4 with a 16-sample ingress at n = 1024.
struct TransitParams {
    double star_radius = 1.0;     ///< Rs
    double planet_radius = 0.1;   ///< projected planet radius R, 0 < R < Rs
    double speed = 12.8;          ///< transit speed v (radius units per time unit)
    double duration = 1.0;        ///< total curve span T
    double baseline_fraction = 0.2421875;  ///< flat baseline at each end, fraction of T
    std::size_t n = 1024;         ///< samples, >= 64
};

/// Additive Gaussian noise, sigma expressed as a fraction of transit depth.
/// Samples come from mt19937_64 + Box-Muller, so a seed pins the curve bit
/// for bit.
struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

Signal1D eclipse_lightcurve(const TransitParams& params, const NoiseSpec& noise);

/// Sample indices of the steepest-slope (inflection) points: mid-ingress and
/// mid-egress, where half the planet disk has crossed the limb.
std::array<std::size_t, 2> inflection_samples(const TransitParams& params);

struct DetectionResult {
    bool found = false;
    std::array<std::size_t, 2> indices{0, 0};  ///< ascending
};

/// Locates the two transit inflection points as the two largest well-separated
/// peaks of |D^q curve| (feller skew theta), after mean removal and Hann
/// windowing. q = 0.5, theta = 1 is the noise-robust detector configuration.
DetectionResult crone_inflection_detect(const Signal1D& curve, double q, double theta);

/// Plot-friendly exports: bare CSV (one sample per line) and JSON carrying
/// the full parameter set alongside the samples.
void write_lightcurve_csv(const std::filesystem::path& path, const Signal1D& curve);
void write_lightcurve_json(const std::filesystem::path& path, const Signal1D& curve,
                           const TransitParams& params, const NoiseSpec& noise);

} // namespace diffint

#endif // DIFFINT_TRANSIT_HPP
