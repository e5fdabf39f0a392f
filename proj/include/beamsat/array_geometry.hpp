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

#ifndef BEAMSAT_ARRAY_GEOMETRY_HPP
#define BEAMSAT_ARRAY_GEOMETRY_HPP

#include "beamsat/errors.hpp"
#include "beamsat/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

namespace beamsat
{

// Angle of departure in radians. Any finite real is accepted; no wrapping to [0, 2pi).
class Angle
{
public:
    constexpr Angle() = default;
    explicit Angle(double radians) : radians_(radians)
    {
        if (!std::isfinite(radians))
            throw ParameterError("Angle: value must be finite");
    }
    constexpr double radians() const noexcept { return radians_; }

private:
    double radians_ = 0.0;
};

// Uniform linear array. Spacing is in wavelengths (d / lambda), so half-wavelength spacing is 0.5.
class ArrayConfig
{
public:
    explicit ArrayConfig(std::size_t n_tx, double spacing = 0.5) : n_tx_(n_tx), spacing_(spacing)
    {
        if (n_tx == 0)
            throw ParameterError("ArrayConfig: n_tx must be >= 1");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw ParameterError("ArrayConfig: spacing must be a positive finite number, got " +
                                 std::to_string(spacing));
    }
    std::size_t n_tx() const noexcept { return n_tx_; }
    double spacing() const noexcept { return spacing_; }

    friend bool operator==(const ArrayConfig &, const ArrayConfig &) = default;

private:
    std::size_t n_tx_;
    double spacing_;
};

// Inter-element phase shift zeta(phi) = 2 pi d sin(phi).
inline double phase_progression(Angle phi, const ArrayConfig &config)
{
    return 2.0 * std::numbers::pi * config.spacing() * std::sin(phi.radians());
}

// Unit-norm ULA response: element m is exp(j m zeta) / sqrt(N_t).
inline CVector steering_vector(Angle phi, const ArrayConfig &config)
{
    const std::size_t n = config.n_tx();
    const double zeta = phase_progression(phi, config);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(n));
    CVector a(n);
    for (std::size_t m = 0; m < n; ++m)
        a[m] = std::polar(amplitude, static_cast<double>(m) * zeta);
    return a;
}

} // namespace beamsat

#endif
