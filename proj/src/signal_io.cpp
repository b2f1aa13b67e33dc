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

#include "diffint/signal_io.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

#include <nlohmann/json.hpp>

#include "diffint/errors.hpp"

namespace diffint {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Signal1D read_signal_csv(const std::filesystem::path& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    Signal1D signal;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view field = trim(line);
        if (field.empty()) continue;
        if (line_no == 1 && skip_header) continue;

        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw IoError(path.string() + ":" + std::to_string(line_no) +
                          ": not a number (pass --header skip to tolerate a header line)");
        signal.samples.push_back(value);
    }
    if (signal.samples.empty()) throw IoError(path.string() + ": no samples");
    return signal;
}

void write_signal_csv(const std::filesystem::path& path, const Signal1D& signal) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    char buf[64];
    for (double v : signal.samples) {
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        if (ec != std::errc{}) throw IoError("csv: value formatting failed");
        out.write(buf, ptr - buf);
        out.put('\n');
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Signal1D read_signal_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }

    const nlohmann::json* array = nullptr;
    Signal1D signal;
    if (doc.is_array()) {
        array = &doc;
    } else if (doc.is_object() && doc.contains("samples") && doc["samples"].is_array()) {
        array = &doc["samples"];
        if (doc.contains("sample_rate") && doc["sample_rate"].is_number())
            signal.sample_rate = doc["sample_rate"].get<double>();
    } else {
        throw IoError(path.string() + ": expected a JSON array or {\"samples\": [...]}");
    }

    signal.samples.reserve(array->size());
    for (const auto& v : *array) {
        if (!v.is_number()) throw IoError(path.string() + ": non-numeric sample");
        signal.samples.push_back(v.get<double>());
    }
    if (signal.samples.empty()) throw IoError(path.string() + ": no samples");
    return signal;
}

void write_signal_json(const std::filesystem::path& path, const Signal1D& signal) {
    nlohmann::json doc;
    doc["samples"] = signal.samples;
    if (signal.sample_rate) doc["sample_rate"] = *signal.sample_rate;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace diffint
