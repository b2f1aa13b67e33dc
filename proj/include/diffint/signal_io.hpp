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

#ifndef DIFFINT_SIGNAL_IO_HPP
#define DIFFINT_SIGNAL_IO_HPP

#include <filesystem>

#include "diffint/engine.hpp"

namespace diffint {

/// CSV signals are one real value per line, nothing else. A non-numeric
/// first line is rejected unless skip_header is set.
Signal1D read_signal_csv(const std::filesystem::path& path, bool skip_header = false);

/// Values are written with shortest round-trip formatting, so rereading the
/// file reproduces the doubles exactly and identical signals give identical
/// bytes.
void write_signal_csv(const std::filesystem::path& path, const Signal1D& signal);

/// Accepts a flat array [..] or {"samples": [..]} with an optional
/// "sample_rate" field.
Signal1D read_signal_json(const std::filesystem::path& path);
void write_signal_json(const std::filesystem::path& path, const Signal1D& signal);

} // namespace diffint

#endif // DIFFINT_SIGNAL_IO_HPP
