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

#ifndef DIFFINT_CLI_HPP
#define DIFFINT_CLI_HPP

#include <iosfwd>
#include <iostream>

namespace diffint::cli {

inline constexpr int kExitOk = 0;       ///< success
inline constexpr int kExitUsage = 1;    ///< bad flags or parameter validation
inline constexpr int kExitIo = 2;       ///< file I/O failure
inline constexpr int kExitCompute = 3;  ///< computation failure

/// Full command dispatch; everything the `diffint` binary does. Factored out
/// of main() so tests can drive the exact argv surface in-process.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

} // namespace diffint::cli

#endif // DIFFINT_CLI_HPP
