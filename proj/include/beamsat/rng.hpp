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

#ifndef BEAMSAT_RNG_HPP
#define BEAMSAT_RNG_HPP

#include "beamsat/array_geometry.hpp"
#include "beamsat/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace beamsat
{

// Random stream for one Monte Carlo trial. Uniforms are built from the raw 64-bit
// engine output and Gaussians by Box-Muller, so the sequence is fixed by the seed
// and does not depend on the standard library's distribution classes.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent substream for trial `trial` of a run seeded with `master`.
    static Rng for_trial(std::uint64_t master, std::uint64_t trial)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
        return Rng(seq);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [0, 2 pi).
    Angle uniform_angle() { return Angle(2.0 * std::numbers::pi * uniform()); }

    // Circularly-symmetric complex Gaussian with E|z|^2 = 1.
    cplx complex_gaussian()
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double radius = std::sqrt(-std::log(u1));
        return std::polar(radius, 2.0 * std::numbers::pi * u2);
    }

private:
    explicit Rng(std::seed_seq &seq) : engine_(seq) {}

    std::mt19937_64 engine_;
};

} // namespace beamsat

#endif
