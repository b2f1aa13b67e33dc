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

#include "diffint/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "diffint/engine.hpp"
#include "diffint/errors.hpp"
#include "diffint/imaging.hpp"
#include "diffint/oracles.hpp"
#include "diffint/signal_io.hpp"
#include "diffint/spectral.hpp"
#include "diffint/transit.hpp"

namespace diffint::cli {

namespace {

Mode parse_mode(const std::string& s) {
    return s == "feller" ? Mode::feller : Mode::riesz;
}

DcPolicy parse_dc(const std::string& s) {
    return s == "identity-at-q0" ? DcPolicy::identity_at_q0 : DcPolicy::zero;
}

Axis parse_axis(const std::string& s) {
    return s == "vertical" ? Axis::vertical : Axis::horizontal;
}

ChannelMode parse_channel_mode(const std::string& s) {
    if (s == "rgb-separate") return ChannelMode::rgb_separate;
    if (s == "hsb-brightness") return ChannelMode::hsb_brightness;
    return ChannelMode::gray;
}

RescaleMode parse_rescale(const std::string& s) {
    if (s == "clamp") return RescaleMode::clamp;
    if (s == "overlay") return RescaleMode::overlay;
    if (s == "midpoint") return RescaleMode::midpoint;
    return RescaleMode::minmax;
}

bool json_path(const std::string& format, const std::string& path) {
    if (format == "json") return true;
    if (format == "csv") return false;
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

struct D1Config {
    std::string input, output;
    double q = 0.0, theta = 0.0, sample_rate = 0.0;
    std::string mode = "riesz", dc_policy = "zero", window = "none";
    std::string scale = "normalized", format = "auto", header = "keep";
};

struct ImageConfig {
    std::string input, output;
    double q = 0.0, theta = 0.3, gain = 1.0, threshold = 0.25;
    std::string mode = "riesz", dc_policy = "zero";
    std::string channel_mode = "gray", rescale = "minmax", axis = "horizontal";
};

struct EclipseConfig {
    std::string output, format = "auto";
    TransitParams transit;  // geometry defaults come from the library
    double depth_ratio = 0.1, sigma = 0.0, q = 0.5, theta = 1.0;
    std::uint64_t seed = 0;
};

struct BenchConfig {
    std::string output, format = "text";
    double q = 0.5, theta = 0.0;
    std::string mode = "riesz";
    std::size_t n = 1 << 14;
    std::uint64_t seed = 1;
};

DiffintParams diffint_params(double q, double theta, const std::string& mode,
                             const std::string& dc_policy) {
    DiffintParams p;
    p.q = q;
    p.theta = theta;
    p.mode = parse_mode(mode);
    p.dc_policy = parse_dc(dc_policy);
    return p;
}

int run_d1(const D1Config& cfg, std::ostream& out) {
    const bool in_json = json_path(cfg.format, cfg.input);
    Signal1D signal = in_json ? read_signal_json(cfg.input)
                              : read_signal_csv(cfg.input, cfg.header == "skip");

    signal = apply_window(signal, cfg.window == "hann" ? WindowKind::hann
                                                       : WindowKind::none);
    DiffintParams params = diffint_params(cfg.q, cfg.theta, cfg.mode, cfg.dc_policy);
    if (cfg.scale == "physical") {
        params.scale = Scale::physical;
        params.sample_rate = cfg.sample_rate;
    }
    const Signal1D result = differintegrate_1d(signal, params);

    if (json_path(cfg.format, cfg.output))
        write_signal_json(cfg.output, result);
    else
        write_signal_csv(cfg.output, result);
    out << "d1: " << signal.samples.size() << " samples, q=" << cfg.q << " -> "
        << cfg.output << "\n";
    return kExitOk;
}

int run_d2(const ImageConfig& cfg, std::ostream& out) {
    const ImageBuffer image = read_image(cfg.input);
    DiffintParams params = diffint_params(cfg.q, cfg.theta, cfg.mode, cfg.dc_policy);
    params.axis = parse_axis(cfg.axis);
    const ImageBuffer result = process_image(image, params,
                                             parse_channel_mode(cfg.channel_mode),
                                             {parse_rescale(cfg.rescale), cfg.gain});
    write_image(result, cfg.output);
    out << "d2: " << image.width << "x" << image.height << " q=" << cfg.q << " -> "
        << cfg.output << "\n";
    return kExitOk;
}

int run_edges(const ImageConfig& cfg, std::ostream& out) {
    const ImageBuffer image = read_image(cfg.input);
    write_image(edge_overlay(image, cfg.q, cfg.threshold), cfg.output);
    out << "edges: q=" << cfg.q << " threshold=" << cfg.threshold << " -> "
        << cfg.output << "\n";
    return kExitOk;
}

int run_emboss(const ImageConfig& cfg, std::ostream& out) {
    const ImageBuffer image = read_image(cfg.input);
    write_image(emboss(image, cfg.q, cfg.theta, parse_axis(cfg.axis)), cfg.output);
    out << "emboss: q=" << cfg.q << " theta=" << cfg.theta << " -> " << cfg.output
        << "\n";
    return kExitOk;
}

int run_eclipse(const EclipseConfig& cfg, std::ostream& out) {
    TransitParams params = cfg.transit;
    params.planet_radius = cfg.depth_ratio * params.star_radius;
    const NoiseSpec noise{cfg.sigma, cfg.seed};

    const Signal1D curve = eclipse_lightcurve(params, noise);
    const auto expected = inflection_samples(params);
    const DetectionResult detection = crone_inflection_detect(curve, cfg.q, cfg.theta);

    out << "eclipse: n=" << params.n << " depth_ratio=" << cfg.depth_ratio
        << " sigma=" << cfg.sigma << " seed=" << cfg.seed << " q=" << cfg.q
        << " theta=" << cfg.theta << "\n";
    out << "analytic_inflections=" << expected[0] << "," << expected[1] << "\n";
    if (detection.found)
        out << "detected_inflections=" << detection.indices[0] << ","
            << detection.indices[1] << "\n";
    else
        out << "detected_inflections=none (fewer than two peaks)\n";

    if (!cfg.output.empty()) {
        if (json_path(cfg.format, cfg.output))
            write_lightcurve_json(cfg.output, curve, params, noise);
        else
            write_lightcurve_csv(cfg.output, curve);
        out << "curve -> " << cfg.output << "\n";
    }
    return kExitOk;
}

int run_bench(const BenchConfig& cfg, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    Signal1D signal;
    signal.samples.resize(cfg.n);
    for (auto& v : signal.samples) v = uniform(rng);

    const DiffintParams params = diffint_params(cfg.q, cfg.theta, cfg.mode, "zero");
    using clock = std::chrono::steady_clock;

    // Warm plan creation out of the timed region, then best of three.
    Signal1D spectral = differintegrate_1d(signal, params);
    double spectral_s = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = clock::now();
        spectral = differintegrate_1d(signal, params);
        spectral_s = std::min(spectral_s,
                              std::chrono::duration<double>(clock::now() - t0).count());
    }

    const auto grid = frequency_grid(cfg.n);
    const Multiplier mult = diffint_multiplier(grid, params);
    const auto t0 = clock::now();
    const Signal1D direct = convolution_apply(signal, mult);
    const double convolution_s =
        std::chrono::duration<double>(clock::now() - t0).count();

    double max_rel = 0.0, ref = 0.0;
    for (double v : spectral.samples) ref = std::max(ref, std::abs(v));
    for (std::size_t i = 0; i < cfg.n; ++i)
        max_rel = std::max(max_rel,
                           std::abs(spectral.samples[i] - direct.samples[i]) / ref);

    if (cfg.format == "json" || (!cfg.output.empty() && json_path(cfg.format, cfg.output))) {
        nlohmann::json doc = {
            {"n", cfg.n},
            {"mode", cfg.mode},
            {"q", cfg.q},
            {"theta", cfg.theta},
            {"spectral_seconds", spectral_s},
            {"convolution_seconds", convolution_s},
            {"speedup", convolution_s / spectral_s},
            {"max_rel_discrepancy", max_rel},
        };
        if (!cfg.output.empty()) {
            std::ofstream f(cfg.output);
            if (!f) throw IoError("cannot open " + cfg.output + " for writing");
            f << doc.dump(2) << "\n";
        } else {
            out << doc.dump(2) << "\n";
        }
    } else {
        std::ostringstream report;
        report << "bench: n=" << cfg.n << " mode=" << cfg.mode << " q=" << cfg.q
               << " theta=" << cfg.theta << "\n"
               << "spectral_seconds=" << spectral_s << "\n"
               << "convolution_seconds=" << convolution_s << "\n"
               << "speedup=" << convolution_s / spectral_s << "\n"
               << "max_rel_discrepancy=" << max_rel << "\n";
        if (!cfg.output.empty()) {
            std::ofstream f(cfg.output);
            if (!f) throw IoError("cannot open " + cfg.output + " for writing");
            f << report.str();
        } else {
            out << report.str();
        }
    }
    return kExitOk;
}

void add_operator_flags(CLI::App* cmd, double& q, double& theta, std::string& mode,
                        std::string& dc_policy, bool require_q) {
    auto* opt = cmd->add_option("--q", q, "differintegral order (q>0 derivative, q<0 integral)");
    if (require_q)
        opt->required();
    else
        opt->capture_default_str();
    cmd->add_option("--theta", theta, "feller skew in [0,1]")->capture_default_str();
    cmd->add_option("--mode", mode, "multiplier family")
        ->check(CLI::IsMember({"riesz", "feller"}))
        ->capture_default_str();
    cmd->add_option("--dc-policy", dc_policy,
                    "zero-frequency handling: zero annihilates the mean, "
                    "identity-at-q0 passes it through")
        ->check(CLI::IsMember({"zero", "identity-at-q0"}))
        ->capture_default_str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "diffint: fractional-order derivatives and integrals of signals and images\n"
        "via frequency-domain multiplier filtering (Riesz / Feller)"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success, 1 invalid usage or parameters, "
               "2 file I/O failure, 3 computation failure.");

    D1Config d1;
    auto* d1_cmd = app.add_subcommand("d1", "differintegrate a 1-D signal (CSV/JSON)");
    d1_cmd->add_option("--input", d1.input, "input signal file")->required();
    d1_cmd->add_option("--output", d1.output, "output signal file")->required();
    add_operator_flags(d1_cmd, d1.q, d1.theta, d1.mode, d1.dc_policy, true);
    d1_cmd->add_option("--window", d1.window, "pre-filter window")
        ->check(CLI::IsMember({"none", "hann"}))
        ->capture_default_str();
    d1_cmd->add_option("--scale", d1.scale,
                       "normalized frequency, or physical (multiplies by (pi*fs)^q)")
        ->check(CLI::IsMember({"normalized", "physical"}))
        ->capture_default_str();
    d1_cmd->add_option("--sample-rate", d1.sample_rate, "fs in Hz for --scale physical")
        ->capture_default_str();
    d1_cmd->add_option("--header", d1.header, "keep rejects a CSV header line, skip tolerates it")
        ->check(CLI::IsMember({"keep", "skip"}))
        ->capture_default_str();
    d1_cmd->add_option("--format", d1.format, "file format (auto = by extension)")
        ->check(CLI::IsMember({"auto", "csv", "json"}))
        ->capture_default_str();

    ImageConfig d2;
    auto* d2_cmd = app.add_subcommand("d2", "differintegrate an image (PGM/PPM)");
    d2_cmd->add_option("input", d2.input, "input image (P5/P6)")->required();
    d2_cmd->add_option("output", d2.output, "output image")->required();
    add_operator_flags(d2_cmd, d2.q, d2.theta, d2.mode, d2.dc_policy, true);
    d2_cmd->add_option("--channel-mode", d2.channel_mode, "which planes get filtered")
        ->check(CLI::IsMember({"gray", "rgb-separate", "hsb-brightness"}))
        ->capture_default_str();
    d2_cmd->add_option("--rescale", d2.rescale, "map filtered values back to [0,1]")
        ->check(CLI::IsMember({"minmax", "clamp", "overlay", "midpoint"}))
        ->capture_default_str();
    d2_cmd->add_option("--gain", d2.gain, "overlay gain (output = input + gain*filtered)")
        ->capture_default_str();
    d2_cmd->add_option("--axis", d2.axis, "feller skew axis")
        ->check(CLI::IsMember({"horizontal", "vertical"}))
        ->capture_default_str();

    ImageConfig edges;
    auto* edges_cmd =
        app.add_subcommand("edges", "edge-style overlay of a thresholded |D^q image|");
    edges_cmd->add_option("input", edges.input, "input image (P5/P6)")->required();
    edges_cmd->add_option("output", edges.output, "output image")->required();
    edges_cmd->add_option("--q", edges.q, "derivative order")
        ->required();
    edges_cmd->add_option("--threshold", edges.threshold,
                          "edge gate in [0,1] on the minmax-rescaled response")
        ->capture_default_str();

    ImageConfig emboss_cfg;
    auto* emboss_cmd = app.add_subcommand("emboss", "skewed derivative embossing");
    emboss_cmd->add_option("input", emboss_cfg.input, "input image (P5/P6)")->required();
    emboss_cmd->add_option("output", emboss_cfg.output, "output image")->required();
    emboss_cmd->add_option("--q", emboss_cfg.q, "derivative order")->default_val(0.5);
    emboss_cmd->add_option("--theta", emboss_cfg.theta, "feller skew in [0,1]")
        ->capture_default_str();
    emboss_cmd->add_option("--axis", emboss_cfg.axis, "skew axis")
        ->check(CLI::IsMember({"horizontal", "vertical"}))
        ->capture_default_str();

    EclipseConfig eclipse;
    auto* eclipse_cmd = app.add_subcommand(
        "eclipse", "synthesize a transit light curve and detect its inflection points");
    eclipse_cmd->add_option("--depth-ratio", eclipse.depth_ratio,
                            "planet/star radius ratio R/Rs (transit depth (R/Rs)^2)")
        ->capture_default_str();
    eclipse_cmd->add_option("--star-radius", eclipse.transit.star_radius, "Rs")
        ->capture_default_str();
    eclipse_cmd->add_option("--speed", eclipse.transit.speed, "transit speed v")
        ->capture_default_str();
    eclipse_cmd->add_option("--duration", eclipse.transit.duration, "total curve span T")
        ->capture_default_str();
    eclipse_cmd->add_option("--baseline-fraction", eclipse.transit.baseline_fraction,
                            "flat baseline at each end, fraction of T")
        ->capture_default_str();
    eclipse_cmd->add_option("--n", eclipse.transit.n, "samples (>= 64)")
        ->capture_default_str();
    eclipse_cmd->add_option("--sigma", eclipse.sigma, "noise sigma, fraction of depth")
        ->capture_default_str();
    eclipse_cmd->add_option("--seed", eclipse.seed, "noise generator seed")
        ->capture_default_str();
    eclipse_cmd->add_option("--q", eclipse.q, "detector order")->capture_default_str();
    eclipse_cmd->add_option("--theta", eclipse.theta, "detector skew")
        ->capture_default_str();
    eclipse_cmd->add_option("--output", eclipse.output, "write the curve here (CSV/JSON)");
    eclipse_cmd->add_option("--format", eclipse.format, "curve file format")
        ->check(CLI::IsMember({"auto", "csv", "json"}))
        ->capture_default_str();

    BenchConfig bench;
    auto* bench_cmd = app.add_subcommand(
        "bench", "time the spectral path against O(n^2) circular convolution");
    bench_cmd->add_option("--n", bench.n, "signal length")->capture_default_str();
    bench_cmd->add_option("--q", bench.q, "order")->capture_default_str();
    bench_cmd->add_option("--theta", bench.theta, "feller skew")->capture_default_str();
    bench_cmd->add_option("--mode", bench.mode, "multiplier family")
        ->check(CLI::IsMember({"riesz", "feller"}))
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "test signal seed")->capture_default_str();
    bench_cmd->add_option("--output", bench.output, "write the report here");
    bench_cmd->add_option("--format", bench.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*d1_cmd) return run_d1(d1, out);
        if (*d2_cmd) return run_d2(d2, out);
        if (*edges_cmd) return run_edges(edges, out);
        if (*emboss_cmd) return run_emboss(emboss_cfg, out);
        if (*eclipse_cmd) return run_eclipse(eclipse, out);
        if (*bench_cmd) return run_bench(bench, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const EngineError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitUsage;
}

} // namespace diffint::cli
