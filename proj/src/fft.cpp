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

#include "diffint/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace diffint::fft {

namespace {

// Plan creation is not thread-safe in FFTW; execution via the new-array
// interface is. Plans are created once per (shape, direction) with
// FFTW_ESTIMATE (deterministic) | FFTW_UNALIGNED (valid for any buffer).
class PlanCache {
public:
    fftw_plan get(std::size_t nx, std::size_t ny, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const Key key{nx, ny, sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<std::complex<double>> scratch(nx * (ny == 0 ? 1 : ny));
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan =
            ny == 0 ? fftw_plan_dft_1d(static_cast<int>(nx), buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED)
                    : fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), buf,
                                       buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    using Key = std::tuple<std::size_t, std::size_t, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

void execute(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny,
             int sign) {
    if (data.size() != nx * (ny == 0 ? 1 : ny))
        throw std::invalid_argument("fft: buffer size does not match shape");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(cache().get(nx, ny, sign), buf, buf);
}

void rescale(std::span<std::complex<double>> data) {
    const double s = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= s;
}

} // namespace

void forward(std::span<std::complex<double>> data) {
    execute(data, data.size(), 0, FFTW_FORWARD);
}

void inverse(std::span<std::complex<double>> data) {
    execute(data, data.size(), 0, FFTW_BACKWARD);
    rescale(data);
}

void forward_2d(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny) {
    execute(data, nx, ny, FFTW_FORWARD);
}

void inverse_2d(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny) {
    execute(data, nx, ny, FFTW_BACKWARD);
    rescale(data);
}

} // namespace diffint::fft
