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

#ifndef DIFFINT_SPECTRAL_HPP
#define DIFFINT_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace diffint {

/// Which frequency-domain definition of the fractional operator to use.
///   riesz  : H(w) = |w|^q           (real, nonnegative multiplier)
///   feller : H(w) = c1(theta,q) (jw)^q + c2(theta,q) (-jw)^q   (skewed)
enum class Mode { riesz, feller };

/// How the zero-frequency bin is filled. |0|^q is singular for q < 0, so the
/// DC value is always a policy choice rather than a formula evaluation.
enum class DcPolicy {
    /// H(DC) = 0 for q != 0 and 1 for q == 0: every non-identity operator
    /// annihilates the signal mean and q = 0 is an exact identity.
    zero,
    /// H(DC) = 1 for every q: the mean passes through unchanged (the
    /// "integration constant" is chosen so the average level is preserved).
    identity_at_q0,
};

/// Output scaling. `normalized` works in dimensionless frequency [-1, 1];
/// `physical` multiplies the result by (pi * fs)^q so that q = 1 approximates
/// a true time derivative for a signal sampled at fs Hz.
enum class Scale { normalized, physical };

/// Skew direction for the 2-D Feller multiplier.
enum class Axis { horizontal, vertical };

/// Full parameter set for one differintegral application.
struct DiffintParams {
    double q = 0.0;          ///< order: derivative for q > 0, integral for q < 0
    double theta = 0.0;      ///< skew in [0, 1]; ignored in riesz mode
    Mode mode = Mode::riesz;
    DcPolicy dc_policy = DcPolicy::zero;
    Scale scale = Scale::normalized;
    double sample_rate = 0.0;           ///< Hz; needed when scale == physical
    Axis axis = Axis::horizontal;       ///< 2-D feller skew axis
};

/// Normalized DFT frequencies in bin order (bin 0 = DC). For an axis of
/// length n the value at bin k is 2k/n for k <= n/2 and 2(k-n)/n above, so
/// the grid spans [-1, 1] and bins k and n-k carry opposite signs.
struct FrequencyGrid {
    std::vector<double> axis_x;  ///< always present
    std::vector<double> axis_y;  ///< empty for 1-D grids

    bool is_2d() const { return !axis_y.empty(); }
    std::size_t nx() const { return axis_x.size(); }
    std::size_t ny() const { return axis_y.size(); }

    /// Radial frequency magnitude sqrt(wx^2 + wy^2) at a 2-D bin.
    double radial(std::size_t kx, std::size_t ky) const;
};

/// Build a 1-D grid of length n, or a square dims==2 grid.
FrequencyGrid frequency_grid(std::size_t n, int dims = 1);

/// Rectangular 2-D grid (nx columns, ny rows).
FrequencyGrid frequency_grid_2d(std::size_t nx, std::size_t ny);

/// Per-bin complex filter values, in the same bin order as the grid that
/// produced them (row-major ky*nx + kx in 2-D). Hermitian by construction for
/// real coefficients, so filtering a real signal yields a real signal.
struct Multiplier {
    std::vector<std::size_t> shape;  ///< {n} or {ny, nx}
    std::vector<std::complex<double>> values;

    std::size_t size() const { return values.size(); }
};

/// Feller weighting of the two half-line operators.
/// General form  c1 = -sin((q+theta)pi/2)/sin(pi theta),
///               c2 = -sin((q-theta)pi/2)/sin(pi theta);
/// theta = 0 reduces to c1 = c2 = -1/(2 cos(q pi/2)) and theta = 1 to
/// c1 = -c2 = -1/(2 sin(q pi/2)) (the "CRONE" case).
struct FellerCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// (sign_j * j * w)^q on the principal branch: |w|^q e^{sign_j j (q pi/2) sgn w}
/// with sgn 0 = 0. sign_j must be +1 or -1. Throws std::domain_error at the
/// w = 0, q < 0 singularity; resolving it is the caller's DC policy.
std::complex<double> signed_power(double omega, double q, int sign_j);

/// Throws std::domain_error for degenerate orders (theta ~ 0 with q odd,
/// theta ~ 1 with q even) and std::invalid_argument for theta outside [0, 1].
FellerCoefficients feller_coefficients(double theta, double q);

/// H = |w|^q per bin (radial magnitude in 2-D); exact all-ones for q = 0.
Multiplier riesz_multiplier(const FrequencyGrid& grid, double q,
                            DcPolicy dc_policy = DcPolicy::zero);

/// H = c1 (jw)^q + c2 (-jw)^q per bin. In 2-D the magnitude is radial and the
/// sign is taken from the selected axis. Bins with no usable sign (the shared
/// Nyquist bin, zero-axis bins in 2-D) keep only the even part
/// (c1+c2) cos(q pi/2) |w|^q. q = 0 yields the exact identity multiplier.
Multiplier feller_multiplier(const FrequencyGrid& grid, double q, double theta,
                             DcPolicy dc_policy = DcPolicy::zero,
                             Axis axis = Axis::horizontal);

/// Dispatch on params.mode.
Multiplier diffint_multiplier(const FrequencyGrid& grid, const DiffintParams& params);

/// Gamma function via a Lanczos rational approximation with reflection for
/// x < 0.5; relative error well under 1e-10 on [-20, 20] away from the poles.
double gamma_function(double x);

/// Generalized binomial coefficient Gamma(q+1)/(Gamma(k+1) Gamma(q-k+1)),
/// evaluated as the falling-factorial product so the denominator-pole limit
/// (integer q >= 0 with k > q) is an exact 0.
double generalized_binomial(double q, unsigned k);

} // namespace diffint

#endif // DIFFINT_SPECTRAL_HPP
