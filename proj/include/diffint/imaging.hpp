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

#ifndef DIFFINT_IMAGING_HPP
#define DIFFINT_IMAGING_HPP

#include <cstddef>
#include <filesystem>
#include <vector>

#include "diffint/engine.hpp"
#include "diffint/spectral.hpp"

namespace diffint {

/// Gray (1 channel) or RGB (3 channel) raster, intensities in [0, 1],
/// row-major and channel-interleaved.
struct ImageBuffer {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 1;
    std::vector<double> values;

    double at(std::size_t x, std::size_t y, std::size_t c = 0) const {
        return values[(y * width + x) * channels + c];
    }
    double& at(std::size_t x, std::size_t y, std::size_t c = 0) {
        return values[(y * width + x) * channels + c];
    }
};

/// How a filtered channel maps back onto displayable [0, 1].
enum class RescaleMode {
    minmax,    ///< (v - min)/(max - min); flat responses collapse to 0.5
    clamp,     ///< clamp(v, 0, 1)
    overlay,   ///< clamp(original + gain * v, 0, 1) -- sharpening
    midpoint,  ///< 0.5 + 0.5 v / max|v|; zero response maps to mid gray
};

struct RescaleSpec {
    RescaleMode mode = RescaleMode::minmax;
    double gain = 1.0;  ///< overlay only, must be > 0
};

enum class ChannelMode { gray, rgb_separate, hsb_brightness };

/// Binary PGM (P5) / PPM (P6), maxval 255. Values map v/255 on read and
/// round(v*255) on write, so write-then-read reproduces 8-bit data exactly.
ImageBuffer read_image(const std::filesystem::path& path);
void write_image(const ImageBuffer& image, const std::filesystem::path& path);

/// Hue/saturation/value with v = max(r,g,b); h in [0,1) as a turn fraction,
/// conventionally 0 for grays.
void rgb_to_hsb(double r, double g, double b, double& h, double& s, double& v);
void hsb_to_rgb(double h, double s, double v, double& r, double& g, double& b);

/// Run the differintegral over the selected channels and rescale back to
/// [0, 1]. hsb_brightness filters only the value plane of an RGB image,
/// leaving hue and saturation untouched. gray on an RGB input averages the
/// channels first and returns a single-channel image.
ImageBuffer process_image(const ImageBuffer& image, const DiffintParams& params,
                          ChannelMode channel_mode, const RescaleSpec& rescale);

/// Edge-style visualization: d = |D^q channel| rescaled minmax, then
/// clamp(channel + (d >= threshold ? d : 0)). Works on the gray channel or
/// the HSB brightness of an RGB image.
ImageBuffer edge_overlay(const ImageBuffer& image, double q, double threshold);

/// Skewed (feller) 2-D differintegral displayed around mid gray.
ImageBuffer emboss(const ImageBuffer& image, double q, double theta,
                   Axis axis = Axis::horizontal);

/// Fraction of non-DC spectral energy above radial frequency 0.5; the
/// quantity the lowpass/highpass interpretation of q is judged by.
double high_frequency_energy_ratio(const Channel2D& channel);

/// Plane extraction/assembly helpers shared with the CLI and tests.
Channel2D extract_channel(const ImageBuffer& image, std::size_t c);
Channel2D gray_channel(const ImageBuffer& image);  ///< mean over channels

} // namespace diffint

#endif // DIFFINT_IMAGING_HPP
