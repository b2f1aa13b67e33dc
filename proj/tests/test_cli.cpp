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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "diffint/cli.hpp"
#include "diffint/imaging.hpp"
#include "diffint/signal_io.hpp"
#include "test_util.hpp"

using namespace diffint;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::vector<const char*> argv{"diffint"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

} // namespace

TEST_CASE("cli: d1 q=0 reproduces the input values") {
    const auto dir = testutil::scratch_dir("cli_d1");
    const auto in = dir / "f.csv", out = dir / "g.csv";
    const Signal1D f{{0.25, -1.5, 3.0, 2.125, -0.75, 0.5}, {}};
    write_signal_csv(in, f);

    CHECK(run_cli({"d1", "--q", "0", "--input", in.string(), "--output",
                   out.string()}) == cli::kExitOk);
    const Signal1D g = read_signal_csv(out);
    REQUIRE(g.samples.size() == f.samples.size());
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        CHECK(std::abs(g.samples[i] - f.samples[i]) < 1e-12);
}

TEST_CASE("cli: csv/json formats interoperate") {
    const auto dir = testutil::scratch_dir("cli_fmt");
    const auto in = dir / "f.json", out = dir / "g.csv";
    write_signal_json(in, {{1.0, 2.0, 3.0, 4.0}, {}});
    CHECK(run_cli({"d1", "--q", "0.5", "--input", in.string(), "--output",
                   out.string()}) == cli::kExitOk);
    CHECK(read_signal_csv(out).samples.size() == 4);
}

TEST_CASE("cli: csv header is rejected unless skipped") {
    const auto dir = testutil::scratch_dir("cli_header");
    const auto in = dir / "f.csv", out = dir / "g.csv";
    std::ofstream(in) << "value\n1\n2\n3\n4\n";

    CHECK(run_cli({"d1", "--q", "0", "--input", in.string(), "--output",
                   out.string()}) == cli::kExitIo);
    CHECK(run_cli({"d1", "--q", "0", "--input", in.string(), "--output",
                   out.string(), "--header", "skip"}) == cli::kExitOk);
    CHECK(read_signal_csv(out).samples.size() == 4);
}

TEST_CASE("cli: exit codes for usage, I/O, and degenerate orders") {
    const auto dir = testutil::scratch_dir("cli_errors");
    const auto in = dir / "f.csv", out = dir / "g.csv";
    write_signal_csv(in, {{1.0, 2.0, 3.0, 4.0}, {}});

    CHECK(run_cli({}) == cli::kExitUsage);
    CHECK(run_cli({"d1", "--q", "0", "--input", in.string(), "--output",
                   out.string(), "--bogus-flag"}) == cli::kExitUsage);
    CHECK(run_cli({"d1", "--q", "0", "--input", (dir / "nope.csv").string(),
                   "--output", out.string()}) == cli::kExitIo);
    // theta=0 with q=1 has no Feller coefficients.
    CHECK(run_cli({"d1", "--q", "1", "--mode", "feller", "--theta", "0",
                   "--input", in.string(), "--output", out.string()}) ==
          cli::kExitUsage);

    std::string help;
    CHECK(run_cli({"--help"}, &help) == cli::kExitOk);
    CHECK(help.find("Exit codes") != std::string::npos);
}

TEST_CASE("cli: d2 produces a valid image of the same shape") {
    const auto dir = testutil::scratch_dir("cli_d2");
    const auto in = dir / "in.pgm", out = dir / "out.pgm";
    ImageBuffer img;
    img.width = 16;
    img.height = 12;
    img.channels = 1;
    img.values.resize(16 * 12);
    for (std::size_t i = 0; i < img.values.size(); ++i)
        img.values[i] = (i % 7) / 6.0;
    write_image(img, in);

    CHECK(run_cli({"d2", in.string(), out.string(), "--q", "-1.3", "--rescale",
                   "minmax"}) == cli::kExitOk);
    const ImageBuffer result = read_image(out);
    CHECK(result.width == 16);
    CHECK(result.height == 12);
    CHECK(result.channels == 1);

    CHECK(run_cli({"edges", in.string(), (dir / "e.pgm").string(), "--q", "0.5",
                   "--threshold", "0.3"}) == cli::kExitOk);
    CHECK(run_cli({"emboss", in.string(), (dir / "m.pgm").string(), "--q", "0.5",
                   "--theta", "0.3"}) == cli::kExitOk);
}

TEST_CASE("cli: byte reproducibility of repeated invocations") {
    const auto dir = testutil::scratch_dir("cli_repro");
    const auto in = dir / "f.csv";
    write_signal_csv(in, {testutil::random_signal(64, 17), {}});

    const auto o1 = dir / "a.csv", o2 = dir / "b.csv";
    const std::vector<std::string> d1_args{"d1",      "--q",     "0.7",
                                           "--mode",  "feller",  "--theta", "0.3",
                                           "--input", in.string()};
    auto with_output = [&](const std::filesystem::path& p) {
        auto args = d1_args;
        args.push_back("--output");
        args.push_back(p.string());
        return args;
    };
    CHECK(run_cli(with_output(o1)) == cli::kExitOk);
    CHECK(run_cli(with_output(o2)) == cli::kExitOk);
    CHECK(testutil::slurp(o1) == testutil::slurp(o2));

    const auto e1 = dir / "c1.json", e2 = dir / "c2.json";
    for (const auto& p : {e1, e2})
        CHECK(run_cli({"eclipse", "--sigma", "0.05", "--seed", "11", "--output",
                       p.string()}) == cli::kExitOk);
    CHECK(testutil::slurp(e1) == testutil::slurp(e2));
}

TEST_CASE("cli: eclipse report and JSON output") {
    const auto dir = testutil::scratch_dir("cli_eclipse");
    const auto curve = dir / "curve.json";
    std::string report;
    CHECK(run_cli({"eclipse", "--sigma", "0", "--q", "0.5", "--theta", "1",
                   "--output", curve.string()},
                  &report) == cli::kExitOk);
    CHECK(report.find("analytic_inflections=256,768") != std::string::npos);
    CHECK(report.find("detected_inflections=257,767") != std::string::npos);

    std::ifstream f(curve);
    nlohmann::json doc;
    f >> doc;
    CHECK(doc["samples"].size() == 1024);
    CHECK(doc["metadata"].contains("seed"));
}

TEST_CASE("cli: bench runs at a small size and reports the comparison") {
    std::string report;
    CHECK(run_cli({"bench", "--n", "256"}, &report) == cli::kExitOk);
    CHECK(report.find("speedup=") != std::string::npos);
    CHECK(report.find("max_rel_discrepancy=") != std::string::npos);

    // The discrepancy field itself must show agreement between the paths.
    const auto pos = report.find("max_rel_discrepancy=") +
                     std::string("max_rel_discrepancy=").size();
    CHECK(std::stod(report.substr(pos)) < 1e-9);
}
