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

// One channel drop: per-user SINR under analog steering and under hybrid steering.

#include "beamsat/beamsat.hpp"

#include <cmath>
#include <cstdio>

int main()
{
    const beamsat::ArrayConfig array(32);
    const std::size_t n_users = 3;
    const auto rho = beamsat::SnrPoint::from_db(20.0);

    beamsat::Rng rng(2024);
    const auto real = beamsat::draw_los_realization(rng, array, n_users);
    const auto h = beamsat::assemble_matrix(real);
    const auto angles = beamsat::los_angles(real);

    const auto analog = beamsat::abs_composite(beamsat::build_rf_matrix(angles, array));
    const auto hybrid = beamsat::hbs_beamformer(h, angles, array);

    std::printf("%4s %10s %10s %12s %12s\n", "user", "aod[deg]", "|alpha|", "ABS SINR dB", "HBS SINR dB");
    for (std::size_t k = 0; k < n_users; ++k)
    {
        const double abs_sinr = beamsat::per_stream_sinr(h, analog.composite, k, rho);
        const double hbs_sinr = beamsat::per_stream_sinr(h, hybrid.composite, k, rho);
        std::printf("%4zu %10.2f %10.3f %12.2f %12.2f\n", k, angles[k].radians() * 180.0 / 3.14159265358979,
                    std::abs(real.users[k].front().gain), 10 * std::log10(abs_sinr), 10 * std::log10(hbs_sinr));
    }
}
