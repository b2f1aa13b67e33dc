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

#include "diffint/imaging.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <fstream>
#include <stdexcept>
#include <string>

#include "diffint/errors.hpp"
#include "diffint/fft.hpp"

namespace diffint {

namespace {

// Dynamic ranges below this are treated as a flat (zero) response so that
// transform roundoff on degenerate inputs is not stretched into noise.
constexpr double kFlatEps = 1e-9;

void validate_image(const ImageBuffer& img, const char* what) {
    if (img.width == 0 || img.height == 0)
        throw std::invalid_argument(std::string(what) + ": empty image");
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument(std::string(what) + ": channels must be 1 or 3");
    if (img.values.size() != img.width * img.height * img.channels)
        throw std::invalid_argument(std::string(what) + ": buffer does not match shape");
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

std::vector<double> rescale_channel(const std::vector<double>& d,
                                    const std::vector<double>& original,
                                    const RescaleSpec& spec) {
    std::vector<double> out(d.size());
    switch (spec.mode) {
    case RescaleMode::minmax: {
        const auto [lo_it, hi_it] = std::minmax_element(d.begin(), d.end());
        const double lo = *lo_it, hi = *hi_it;
        if (hi - lo < kFlatEps) {
            std::fill(out.begin(), out.end(), 0.5);
        } else {
            for (std::size_t i = 0; i < d.size(); ++i) out[i] = (d[i] - lo) / (hi - lo);
        }
        break;
    }
    case RescaleMode::clamp:
        for (std::size_t i = 0; i < d.size(); ++i) out[i] = clamp01(d[i]);
        break;
    case RescaleMode::overlay:
        if (!(spec.gain > 0.0))
            throw std::invalid_argument("rescale: overlay gain must be positive");
        for (std::size_t i = 0; i < d.size(); ++i)
            out[i] = clamp01(original[i] + spec.gain * d[i]);
        break;
    case RescaleMode::midpoint: {
        double peak = 0.0;
        for (double v : d) peak = std::max(peak, std::abs(v));
        if (peak < kFlatEps) {
            std::fill(out.begin(), out.end(), 0.5);
        } else {
            for (std::size_t i = 0; i < d.size(); ++i)
                out[i] = clamp01(0.5 + 0.5 * d[i] / peak);
        }
        break;
    }
    }
    return out;
}

std::vector<double> minmax01(const std::vector<double>& d) {
    return rescale_channel(d, d, {RescaleMode::minmax, 1.0});
}

ImageBuffer gray_image(const Channel2D& ch) {
    ImageBuffer img;
    img.width = ch.width;
    img.height = ch.height;
    img.channels = 1;
    img.values.resize(ch.values.size());
    for (std::size_t i = 0; i < ch.values.size(); ++i) img.values[i] = clamp01(ch.values[i]);
    return img;
}

// Split an RGB image into HSB planes (or pass a gray image through as its
// own brightness), hand the brightness to `filter`, and reassemble.
template <typename Fn>
ImageBuffer on_brightness(const ImageBuffer& img, Fn&& filter) {
    const std::size_t npx = img.width * img.height;
    if (img.channels == 1) {
        Channel2D v{img.width, img.height, img.values};
        Channel2D out = filter(std::move(v));
        return gray_image(out);
    }
    std::vector<double> hs(npx), ss(npx);
    Channel2D v{img.width, img.height, std::vector<double>(npx)};
    for (std::size_t i = 0; i < npx; ++i)
        rgb_to_hsb(img.values[3 * i], img.values[3 * i + 1], img.values[3 * i + 2],
                   hs[i], ss[i], v.values[i]);
    Channel2D out = filter(std::move(v));
    ImageBuffer result = img;
    for (std::size_t i = 0; i < npx; ++i) {
        double r, g, b;
        hsb_to_rgb(hs[i], ss[i], clamp01(out.values[i]), r, g, b);
        result.values[3 * i] = clamp01(r);
        result.values[3 * i + 1] = clamp01(g);
        result.values[3 * i + 2] = clamp01(b);
    }
    return result;
}

int read_pnm_int(std::istream& in) {
    // Skip whitespace and '#' comment lines, then read a decimal field.
    int c = in.get();
    while (c != EOF && (std::isspace(c) || c == '#')) {
        if (c == '#')
            while (c != EOF && c != '\n') c = in.get();
        c = in.get();
    }
    if (c == EOF || !std::isdigit(c)) throw IoError("pnm: malformed header");
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 30) throw IoError("pnm: header field out of range");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(value);
}

} // namespace

ImageBuffer read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6'))
        throw IoError("pnm: not a binary PGM (P5) or PPM (P6) file: " + path.string());
    const std::size_t channels = magic[1] == '5' ? 1 : 3;

    const int w = read_pnm_int(in);
    const int h = read_pnm_int(in);
    const int maxval = read_pnm_int(in);
    if (w < 1 || h < 1) throw IoError("pnm: bad dimensions");
    if (maxval != 255) throw IoError("pnm: unsupported maxval (only 255)");

    // Exactly one whitespace byte separates the header from the payload.
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) throw IoError("pnm: malformed header");

    const std::size_t count =
        static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * channels;
    std::vector<unsigned char> raw(count);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
        throw IoError("pnm: truncated pixel data");

    ImageBuffer img;
    img.width = static_cast<std::size_t>(w);
    img.height = static_cast<std::size_t>(h);
    img.channels = channels;
    img.values.resize(count);
    for (std::size_t i = 0; i < count; ++i) img.values[i] = raw[i] / 255.0;
    return img;
}

void write_image(const ImageBuffer& img, const std::filesystem::path& path) {
    validate_image(img, "write_image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");

    out << (img.channels == 1 ? "P5" : "P6") << "\n"
        << img.width << " " << img.height << "\n255\n";
    std::vector<unsigned char> raw(img.values.size());
    for (std::size_t i = 0; i < img.values.size(); ++i)
        raw[i] = static_cast<unsigned char>(std::lround(clamp01(img.values[i]) * 255.0));
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
    if (!out) throw IoError("pnm: write failed: " + path.string());
}

void rgb_to_hsb(double r, double g, double b, double& h, double& s, double& v) {
    v = std::max({r, g, b});
    const double lo = std::min({r, g, b});
    const double c = v - lo;
    s = v > 0.0 ? c / v : 0.0;
    if (c <= 0.0) {
        h = 0.0;
        return;
    }
    double h6;
    if (v == r) {
        h6 = std::fmod((g - b) / c, 6.0);
        if (h6 < 0.0) h6 += 6.0;
    } else if (v == g) {
        h6 = (b - r) / c + 2.0;
    } else {
        h6 = (r - g) / c + 4.0;
    }
    h = h6 / 6.0;
}

void hsb_to_rgb(double h, double s, double v, double& r, double& g, double& b) {
    double h6 = std::fmod(h, 1.0);
    if (h6 < 0.0) h6 += 1.0;
    h6 *= 6.0;
    const int sector = std::min(5, static_cast<int>(h6));
    const double f = h6 - sector;
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
    }
}

Channel2D extract_channel(const ImageBuffer& img, std::size_t c) {
    validate_image(img, "extract_channel");
    if (c >= img.channels) throw std::invalid_argument("extract_channel: no such channel");
    Channel2D ch{img.width, img.height, std::vector<double>(img.width * img.height)};
    for (std::size_t i = 0; i < ch.values.size(); ++i)
        ch.values[i] = img.values[i * img.channels + c];
    return ch;
}

Channel2D gray_channel(const ImageBuffer& img) {
    validate_image(img, "gray_channel");
    if (img.channels == 1) return {img.width, img.height, img.values};
    Channel2D ch{img.width, img.height, std::vector<double>(img.width * img.height)};
    for (std::size_t i = 0; i < ch.values.size(); ++i)
        ch.values[i] = (img.values[3 * i] + img.values[3 * i + 1] + img.values[3 * i + 2]) / 3.0;
    return ch;
}

ImageBuffer process_image(const ImageBuffer& img, const DiffintParams& params,
                          ChannelMode channel_mode, const RescaleSpec& rescale) {
    validate_image(img, "process_image");

    const auto filter_rescale = [&](const Channel2D& src) {
        Channel2D d = differintegrate_2d(src, params);
        Channel2D out = src;
        out.values = rescale_channel(d.values, src.values, rescale);
        return out;
    };

    switch (channel_mode) {
    case ChannelMode::gray:
        return gray_image(filter_rescale(gray_channel(img)));
    case ChannelMode::rgb_separate: {
        if (img.channels == 1) return gray_image(filter_rescale(gray_channel(img)));
        ImageBuffer out = img;
        for (std::size_t c = 0; c < 3; ++c) {
            Channel2D processed = filter_rescale(extract_channel(img, c));
            for (std::size_t i = 0; i < processed.values.size(); ++i)
                out.values[i * 3 + c] = clamp01(processed.values[i]);
        }
        return out;
    }
    case ChannelMode::hsb_brightness:
        return on_brightness(img, filter_rescale);
    }
    throw std::invalid_argument("process_image: unknown channel mode");
}

ImageBuffer edge_overlay(const ImageBuffer& img, double q, double threshold) {
    validate_image(img, "edge_overlay");
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw std::invalid_argument("edge_overlay: threshold must lie in [0, 1]");

    DiffintParams params;
    params.q = q;
    params.mode = Mode::riesz;

    return on_brightness(img, [&](const Channel2D& src) {
        Channel2D d = differintegrate_2d(src, params);
        for (auto& v : d.values) v = std::abs(v);
        const std::vector<double> edge = minmax01(d.values);
        Channel2D out = src;
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] = clamp01(src.values[i] + (edge[i] >= threshold ? edge[i] : 0.0));
        return out;
    });
}

ImageBuffer emboss(const ImageBuffer& img, double q, double theta, Axis axis) {
    validate_image(img, "emboss");

    DiffintParams params;
    params.q = q;
    params.theta = theta;
    params.mode = Mode::feller;
    params.axis = axis;

    return on_brightness(img, [&](const Channel2D& src) {
        Channel2D d = differintegrate_2d(src, params);
        Channel2D out = src;
        out.values = rescale_channel(d.values, src.values, {RescaleMode::midpoint, 1.0});
        return out;
    });
}

double high_frequency_energy_ratio(const Channel2D& channel) {
    if (channel.width < 2 || channel.height < 2)
        throw std::invalid_argument("high_frequency_energy_ratio: channel too small");
    std::vector<std::complex<double>> buf(channel.values.begin(), channel.values.end());
    fft::forward_2d(buf, channel.width, channel.height);

    const auto grid = frequency_grid_2d(channel.width, channel.height);
    double high = 0.0, total = 0.0;
    for (std::size_t ky = 0; ky < channel.height; ++ky)
        for (std::size_t kx = 0; kx < channel.width; ++kx) {
            if (kx == 0 && ky == 0) continue;  // DC carries no shape information
            const double e = std::norm(buf[ky * channel.width + kx]);
            total += e;
            if (grid.radial(kx, ky) > 0.5) high += e;
        }
    return total > 0.0 ? high / total : 0.0;
}

} // namespace diffint
