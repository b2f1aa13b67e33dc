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

#ifndef DIFFINT_ERRORS_HPP
#define DIFFINT_ERRORS_HPP

#include <stdexcept>

namespace diffint {

/// File or stream failure (missing file, malformed header, truncated payload).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal numerical contract violation, e.g. a multiplier that fails the
/// real-output symmetry check. Indicates a bug, not bad user input.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace diffint

#endif // DIFFINT_ERRORS_HPP
