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

#ifndef DIFFINT_FFT_HPP
#define DIFFINT_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>

namespace diffint::fft {

// Complex transforms backed by FFTW (any length, O(n log n)). Convention:
// forward is unnormalized, inverse carries the 1/n (or 1/(nx*ny)) factor, so
// inverse(forward(x)) == x. Plans are cached per size and executed
// single-threaded; calls are safe from multiple threads.

void forward(std::span<std::complex<double>> data);
void inverse(std::span<std::complex<double>> data);

/// 2-D transforms on row-major data (ny rows of nx samples).
void forward_2d(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny);
void inverse_2d(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny);

} // namespace diffint::fft

#endif // DIFFINT_FFT_HPP
