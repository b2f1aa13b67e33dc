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

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include <doctest.h>

#include "diffint/engine.hpp"
#include "test_util.hpp"

using namespace diffint;
using testutil::random_signal;
using testutil::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;

Signal1D cosine(std::size_t n, std::size_t bin, double amp = 1.0) {
    Signal1D s;
    s.samples.resize(n);
    for (std::size_t t = 0; t < n; ++t)
        s.samples[t] = amp * std::cos(2.0 * kPi * static_cast<double>(bin) *
                                      static_cast<double>(t) / static_cast<double>(n));
    return s;
}
} // namespace

TEST_CASE("single-bin cosine is scaled by |w|^q") {
    const std::size_t n = 64, bin = 3;
    const Signal1D f = cosine(n, bin);
    DiffintParams p;
    p.q = 0.5;
    const Signal1D out = differintegrate_1d(f, p);
    const double scale = std::pow(2.0 * 3.0 / 64.0, 0.5);
    for (std::size_t t = 0; t < n; ++t)
        CHECK(out.samples[t] ==
              doctest::Approx(scale * f.samples[t]).epsilon(1e-12));
}

TEST_CASE("q=0 is the identity in both modes") {
    const auto samples = random_signal(50, 77);
    for (Mode mode : {Mode::riesz, Mode::feller}) {
        DiffintParams p;
        p.q = 0.0;
        p.theta = 0.6;
        p.mode = mode;
        const Signal1D out = differintegrate_1d({samples, {}}, p);
        CHECK(testutil::max_abs_diff(out.samples, samples) < 1e-12);
    }
}

TEST_CASE("constant signal is annihilated for q != 0") {
    Signal1D f{std::vector<double>(32, 5.0), {}};
    DiffintParams p;
    p.q = 0.5;
    const Signal1D out = differintegrate_1d(f, p);
    for (double v : out.samples) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("identity_at_q0 policy preserves the mean instead") {
    const auto samples = random_signal(64, 3);
    DiffintParams p;
    p.q = -0.8;
    p.dc_policy = DcPolicy::identity_at_q0;
    const Signal1D out = differintegrate_1d({samples, {}}, p);
    double mean_in = 0.0, mean_out = 0.0;
    for (std::size_t i = 0; i < 64; ++i) {
        mean_in += samples[i];
        mean_out += out.samples[i];
    }
    CHECK(mean_out / 64.0 == doctest::Approx(mean_in / 64.0).epsilon(1e-12));
}

TEST_CASE("2-D separable cosine on bin (1,1) scales by the radial eigenvalue") {
    const std::size_t n = 8;
    Channel2D ch{n, n, std::vector<double>(n * n)};
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            ch.values[y * n + x] =
                std::cos(2.0 * kPi * (static_cast<double>(x) + static_cast<double>(y)) /
                         static_cast<double>(n));
    DiffintParams p;
    p.q = 2.0;
    const Channel2D out = differintegrate_2d(ch, p);
    // rho(1,1) = sqrt(0.25^2 + 0.25^2), squared = 0.125
    for (std::size_t i = 0; i < n * n; ++i)
        CHECK(out.values[i] == doctest::Approx(0.125 * ch.values[i]).epsilon(1e-10));
}

TEST_CASE("2-D identity and DC annihilation") {
    Channel2D flat{7, 5, std::vector<double>(35, 2.5)};
    DiffintParams p;
    p.q = -1.3;
    const Channel2D zeros = differintegrate_2d(flat, p);
    for (double v : zeros.values) CHECK(std::abs(v) < 1e-12);

    Channel2D noisy{6, 6, random_signal(36, 9)};
    p.q = 0.0;
    const Channel2D same = differintegrate_2d(noisy, p);
    CHECK(testutil::max_abs_diff(same.values, noisy.values) < 1e-12);
}

TEST_CASE("hann window") {
    const Signal1D w3 = apply_window({{1.0, 1.0, 1.0}, {}}, WindowKind::hann);
    CHECK(w3.samples[0] == 0.0);
    CHECK(w3.samples[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w3.samples[2] == 0.0);

    const Signal1D w5 = apply_window({std::vector<double>(5, 1.0), {}}, WindowKind::hann);
    CHECK(w5.samples[0] == 0.0);
    CHECK(w5.samples[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w5.samples[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w5.samples[3] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w5.samples[4] == 0.0);

    const auto orig = random_signal(17, 1);
    const Signal1D none = apply_window({orig, {}}, WindowKind::none);
    CHECK(none.samples == orig);
}

TEST_CASE("linearity over random signals, both modes") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> qdist(-2.0, 2.0), cdist(-3.0, 3.0),
        tdist(0.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 96;
        const auto f1 = random_signal(n, 1000 + rep);
        const auto f2 = random_signal(n, 2000 + rep);
        const double a = cdist(rng), b = cdist(rng);

        DiffintParams p;
        p.q = qdist(rng);
        p.mode = rep % 2 == 0 ? Mode::riesz : Mode::feller;
        p.theta = tdist(rng);

        std::vector<double> combo(n);
        for (std::size_t i = 0; i < n; ++i) combo[i] = a * f1[i] + b * f2[i];
        const auto lhs = differintegrate_1d({combo, {}}, p).samples;

        const auto d1 = differintegrate_1d({f1, {}}, p).samples;
        const auto d2 = differintegrate_1d({f2, {}}, p).samples;
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = a * d1[i] + b * d2[i];

        CHECK(rel_err(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("composition and commutation for zero-mean signals") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> qdist(-2.0, 2.0);
    for (int rep = 0; rep < 10; ++rep) {
        const auto f = random_signal(128, 500 + rep, /*zero_mean=*/true);
        DiffintParams p1, p2, p12;
        p1.q = qdist(rng);
        p2.q = qdist(rng);
        p12.q = p1.q + p2.q;

        const auto ab =
            differintegrate_1d(differintegrate_1d({f, {}}, p2), p1).samples;
        const auto ba =
            differintegrate_1d(differintegrate_1d({f, {}}, p1), p2).samples;
        const auto once = differintegrate_1d({f, {}}, p12).samples;

        CHECK(rel_err(ab, once) < 1e-9);
        CHECK(rel_err(ba, once) < 1e-9);
    }
}

TEST_CASE("inverse: D^-q D^q f = f - mean(f)") {
    for (double q : {0.5, 1.0, 2.2, -0.7}) {
        const auto f = random_signal(128, 31, /*zero_mean=*/true);
        DiffintParams fwd, bwd;
        fwd.q = q;
        bwd.q = -q;
        const auto back =
            differintegrate_1d(differintegrate_1d({f, {}}, fwd), bwd).samples;
        CHECK(rel_err(back, f) < 1e-9);
    }
}

TEST_CASE("real output: imaginary residual is tiny") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> qdist(-2.5, 2.5), tdist(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        DiffintParams p;
        p.q = qdist(rng);
        p.mode = rep % 2 == 0 ? Mode::riesz : Mode::feller;
        p.theta = tdist(rng);
        double residual = 1.0;
        differintegrate_1d({random_signal(200, 900 + rep), {}}, p, residual);
        CHECK(residual < 1e-10);
    }
}

TEST_CASE("shift equivariance") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> qdist(-2.0, 2.0);
    std::uniform_int_distribution<std::size_t> sdist(1, 127);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 128;
        const auto f = random_signal(n, 40 + rep);
        const std::size_t s = sdist(rng);
        DiffintParams p;
        p.q = qdist(rng);
        p.mode = rep % 2 == 0 ? Mode::riesz : Mode::feller;
        p.theta = 0.8;

        std::vector<double> shifted(n);
        for (std::size_t i = 0; i < n; ++i) shifted[i] = f[(i + n - s) % n];

        const auto d_shift = differintegrate_1d({shifted, {}}, p).samples;
        const auto d = differintegrate_1d({f, {}}, p).samples;
        std::vector<double> shift_d(n);
        for (std::size_t i = 0; i < n; ++i) shift_d[i] = d[(i + n - s) % n];

        double rms = 0.0;
        for (double v : d) rms += v * v;
        rms = std::sqrt(rms / static_cast<double>(n));
        CHECK(testutil::max_abs_diff(d_shift, shift_d) < 1e-10 * std::max(rms, 1.0));
    }
}

TEST_CASE("physical scaling matches (pi fs)^q") {
    const std::size_t n = 64, bin = 5;
    const double fs = 100.0;
    Signal1D f = cosine(n, bin);
    f.sample_rate = fs;
    DiffintParams p;
    p.q = 1.0;
    p.scale = Scale::physical;
    const Signal1D out = differintegrate_1d(f, p);
    // |w|^1 * (pi fs) = (2 bin / n) * pi * fs, the true angular frequency.
    const double expect = 2.0 * kPi * static_cast<double>(bin) * fs /
                          static_cast<double>(n);
    double peak = 0.0;
    for (double v : out.samples) peak = std::max(peak, std::abs(v));
    CHECK(peak == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("concurrent calls are safe and bit-reproducible") {
    const auto f = random_signal(96, 512);
    DiffintParams p;
    p.q = 0.7;
    p.mode = Mode::feller;
    p.theta = 0.4;
    const auto serial = differintegrate_1d({f, {}}, p).samples;

    std::array<std::vector<double>, 8> results;
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            // Different sizes force concurrent plan creation as well.
            DiffintParams other;
            other.q = -0.4 - 0.1 * t;
            const auto g = random_signal(64 + 8 * static_cast<std::size_t>(t),
                                         600 + static_cast<std::uint64_t>(t));
            differintegrate_1d({g, {}}, other);
            results[static_cast<std::size_t>(t)] =
                differintegrate_1d({f, {}}, p).samples;
        });
    for (auto& th : threads) th.join();
    for (const auto& r : results) CHECK(r == serial);  // bitwise identical
}

TEST_CASE("validation errors") {
    DiffintParams p;
    p.q = 0.5;
    CHECK_THROWS_AS(differintegrate_1d({{1.0}, {}}, p), std::invalid_argument);
    CHECK_THROWS_AS(differintegrate_1d({{1.0, std::nan("")}, {}}, p),
                    std::invalid_argument);

    DiffintParams bad_theta;
    bad_theta.mode = Mode::feller;
    bad_theta.theta = 1.5;
    CHECK_THROWS_AS(differintegrate_1d({{1.0, 2.0, 3.0}, {}}, bad_theta),
                    std::invalid_argument);

    DiffintParams phys;
    phys.q = 1.0;
    phys.scale = Scale::physical;  // no rate anywhere
    CHECK_THROWS_AS(differintegrate_1d({{1.0, 2.0, 3.0}, {}}, phys),
                    std::invalid_argument);

    DiffintParams degenerate;
    degenerate.mode = Mode::feller;
    degenerate.theta = 0.0;
    degenerate.q = 1.0;
    CHECK_THROWS_AS(differintegrate_1d({{1.0, 2.0, 3.0, 4.0}, {}}, degenerate),
                    std::domain_error);

    Channel2D thin{1, 8, std::vector<double>(8, 0.0)};
    CHECK_THROWS_AS(differintegrate_2d(thin, p), std::invalid_argument);
}
