// SPDX-License-Identifier: Apache-2.0
//
// beamsat: multi-user mmWave beam steering simulation and analytic SE bounds
// Copyright (C) 2026 The beamsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BEAMSAT_BESSEL_HPP
#define BEAMSAT_BESSEL_HPP

#include <cmath>
#include <limits>
#include <numbers>

namespace beamsat
{

namespace detail
{

// Ascending series sum_m (-x^2/4)^m / (m!)^2. Largest term near m = x/2 is
// about e^x / (pi x), so cancellation costs ~log10(e^x) digits.
inline double j0_series(double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 200; ++m)
    {
        term *= q / (static_cast<double>(m) * static_cast<double>(m));
        sum += term;
        if (std::abs(term) < std::numeric_limits<double>::epsilon() * 1e-3)
            break;
    }
    return sum;
}

// Hankel expansion J0(x) = sqrt(2 / (pi x)) (P cos chi - Q sin chi), chi = x - pi/4.
// Summed until the terms drop below 1e-17 or start growing (optimal truncation);
// the truncation error is then of order exp(-2x).
inline double j0_asymptotic(double x)
{
    double p = 1.0;
    double q = 0.0;
    double t = 1.0; // t_k = prod_{i<=k} (2i-1)^2 / (i 8x)
    for (int k = 1; k < 200; ++k)
    {
        const double odd = 2.0 * k - 1.0;
        const double next = t * odd * odd / (8.0 * k * x);
        if (next > t || next < 1e-17)
            break;
        t = next;
        // k even contributes (-1)^(k/2) t to P; k odd contributes -(-1)^((k-1)/2) t to Q.
        if (k % 2 == 0)
            p += ((k / 2) % 2 == 0 ? t : -t);
        else
            q -= (((k - 1) / 2) % 2 == 0 ? t : -t);
    }
    // cos(x - pi/4) = (cos x + sin x)/sqrt2, sin(x - pi/4) = (sin x - cos x)/sqrt2
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double amplitude = std::sqrt(2.0 / (std::numbers::pi * x));
    return amplitude * (p * (c + s) - q * (s - c)) / std::numbers::sqrt2;
}

} // namespace detail

// Switch point between the two evaluation routes. Series cancellation at 12 costs
// under 4 digits; the asymptotic truncation error there is ~1e-11.
inline constexpr double j0_series_limit = 12.0;

// Zero-order Bessel function of the first kind, absolute error well under 1e-9 on |x| <= 450.
inline double bessel_j0(double x)
{
    const double ax = std::abs(x);
    return ax < j0_series_limit ? detail::j0_series(ax) : detail::j0_asymptotic(ax);
}

} // namespace beamsat

#endif
