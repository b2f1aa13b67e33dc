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

#include "diffint/transit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "diffint/errors.hpp"
#include "diffint/signal_io.hpp"

namespace diffint {

namespace {

constexpr double kPi = std::numbers::pi;

// Box-Muller over mt19937_64. std::normal_distribution is implementation
// defined; this generator is pinned so seeded curves are portable.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = ((rng_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = (rng_() >> 11) * 0x1.0p-53;        // [0, 1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * kPi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct TransitTimes {
    double ingress_start, ingress_end, egress_start, egress_end;
};

TransitTimes transit_times(const TransitParams& p) {
    if (!(p.planet_radius > 0.0 && p.planet_radius < p.star_radius))
        throw std::invalid_argument("transit: need 0 < planet radius < star radius");
    if (!(p.speed > 0.0)) throw std::invalid_argument("transit: speed must be positive");
    if (!(p.duration > 0.0)) throw std::invalid_argument("transit: duration must be positive");
    if (!(p.baseline_fraction >= 0.0 && p.baseline_fraction < 0.5))
        throw std::invalid_argument("transit: baseline fraction must lie in [0, 0.5)");
    if (p.n < 64) throw std::invalid_argument("transit: need at least 64 samples");

    TransitTimes t;
    const double limb_crossing = 2.0 * p.planet_radius / p.speed;
    t.ingress_start = p.baseline_fraction * p.duration;
    t.ingress_end = t.ingress_start + limb_crossing;
    t.egress_end = p.duration - t.ingress_start;
    t.egress_start = t.egress_end - limb_crossing;
    if (t.ingress_end > t.egress_start)
        throw std::invalid_argument(
            "transit: invalid geometry, transit does not fit inside the window "
            "(reduce planet radius or raise speed)");
    return t;
}

// Brightness during a limb crossing, x = v * elapsed / R in [0, 2].
double crossing_brightness(double x, const TransitParams& p) {
    const double phi = 2.0 * std::acos(std::clamp(1.0 - x, -1.0, 1.0));
    const double area = 0.5 * p.planet_radius * p.planet_radius * (phi - std::sin(phi));
    return 1.0 - area / (kPi * p.star_radius * p.star_radius);
}

} // namespace

Signal1D eclipse_lightcurve(const TransitParams& p, const NoiseSpec& noise) {
    if (!(noise.sigma >= 0.0)) throw std::invalid_argument("transit: sigma must be >= 0");
    const TransitTimes tt = transit_times(p);

    const double depth = (p.planet_radius / p.star_radius) *
                         (p.planet_radius / p.star_radius);
    Signal1D curve;
    curve.samples.resize(p.n);
    for (std::size_t k = 0; k < p.n; ++k) {
        const double t = p.duration * static_cast<double>(k) / static_cast<double>(p.n);
        double value;
        if (t < tt.ingress_start || t >= tt.egress_end)
            value = 1.0;
        else if (t < tt.ingress_end)
            value = crossing_brightness(p.speed * (t - tt.ingress_start) / p.planet_radius, p);
        else if (t < tt.egress_start)
            value = 1.0 - depth;
        else
            value = crossing_brightness(p.speed * (tt.egress_end - t) / p.planet_radius, p);
        curve.samples[k] = value;
    }

    if (noise.sigma > 0.0) {
        GaussianSampler gauss(noise.seed);
        for (auto& v : curve.samples) v += noise.sigma * depth * gauss.next();
    }
    return curve;
}

std::array<std::size_t, 2> inflection_samples(const TransitParams& p) {
    const TransitTimes tt = transit_times(p);
    const double half_crossing = p.planet_radius / p.speed;
    const auto to_index = [&](double t) {
        auto k = static_cast<long>(std::lround(t / p.duration * static_cast<double>(p.n)));
        return static_cast<std::size_t>(std::clamp<long>(k, 0, static_cast<long>(p.n) - 1));
    };
    return {to_index(tt.ingress_start + half_crossing),
            to_index(tt.egress_end - half_crossing)};
}

DetectionResult crone_inflection_detect(const Signal1D& curve, double q, double theta) {
    const std::size_t n = curve.samples.size();
    if (n < 64) throw std::invalid_argument("crone_inflection_detect: need >= 64 samples");

    Signal1D work = curve;
    const double mean = std::accumulate(work.samples.begin(), work.samples.end(), 0.0) /
                        static_cast<double>(n);
    for (auto& v : work.samples) v -= mean;
    work = apply_window(work, WindowKind::hann);

    DiffintParams params;
    params.q = q;
    params.theta = theta;
    params.mode = Mode::feller;
    Signal1D d = differintegrate_1d(work, params);
    std::vector<double> mag(n);
    for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(d.samples[i]);

    // Strict interior local maxima, strongest first.
    std::vector<std::size_t> peaks;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (mag[i] > mag[i - 1] && mag[i] > mag[i + 1]) peaks.push_back(i);
    std::sort(peaks.begin(), peaks.end(),
              [&](std::size_t a, std::size_t b) { return mag[a] > mag[b]; });

    // Greedy pick with a minimum separation so both shoulders of one peak
    // cannot be reported as the two transitions.
    const std::size_t min_sep = n / 16;
    std::vector<std::size_t> picked;
    for (std::size_t idx : peaks) {
        bool clear = true;
        for (std::size_t other : picked)
            if ((idx > other ? idx - other : other - idx) < min_sep) {
                clear = false;
                break;
            }
        if (clear) {
            picked.push_back(idx);
            if (picked.size() == 2) break;
        }
    }

    DetectionResult result;
    if (picked.size() < 2) return result;
    result.found = true;
    result.indices = {std::min(picked[0], picked[1]), std::max(picked[0], picked[1])};
    return result;
}

void write_lightcurve_csv(const std::filesystem::path& path, const Signal1D& curve) {
    write_signal_csv(path, curve);
}

void write_lightcurve_json(const std::filesystem::path& path, const Signal1D& curve,
                           const TransitParams& params, const NoiseSpec& noise) {
    nlohmann::json doc;
    doc["samples"] = curve.samples;
    doc["metadata"] = {
        {"star_radius", params.star_radius},
        {"planet_radius", params.planet_radius},
        {"speed", params.speed},
        {"duration", params.duration},
        {"baseline_fraction", params.baseline_fraction},
        {"n", params.n},
        {"sigma", noise.sigma},
        {"seed", noise.seed},
    };
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace diffint
