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

#ifndef BEAMSAT_CHANNEL_HPP
#define BEAMSAT_CHANNEL_HPP

#include "beamsat/array_geometry.hpp"
#include "beamsat/errors.hpp"
#include "beamsat/matrix.hpp"
#include "beamsat/rng.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace beamsat
{

// One propagation path: complex amplitude alpha and angle of departure phi.
struct PathParams
{
    cplx gain;
    Angle aod;
};

// Path sets for K users over one transmit array.
struct ChannelRealization
{
    std::vector<std::vector<PathParams>> users;
    ArrayConfig config;

    std::size_t n_users() const noexcept { return users.size(); }
};

// K x N_t, row k is the channel row vector h_k of user k.
using ChannelMatrix = CMatrix;

// Draws P_k paths for every user k: angles uniform on [0, 2 pi), gains CN(0, 1).
// Per path the angle is drawn before the gain.
inline ChannelRealization draw_realization(Rng &rng, const ArrayConfig &config,
                                           std::span<const std::size_t> paths_per_user)
{
    if (paths_per_user.empty())
        throw ParameterError("draw_realization: need at least one user");
    ChannelRealization real{{}, config};
    real.users.reserve(paths_per_user.size());
    for (std::size_t p : paths_per_user)
    {
        if (p == 0)
            throw ParameterError("draw_realization: every user needs at least one path");
        std::vector<PathParams> paths;
        paths.reserve(p);
        for (std::size_t i = 0; i < p; ++i)
        {
            const Angle aod = rng.uniform_angle();
            paths.push_back({rng.complex_gaussian(), aod});
        }
        real.users.push_back(std::move(paths));
    }
    return real;
}

// Pure line-of-sight draw: one path per user.
inline ChannelRealization draw_los_realization(Rng &rng, const ArrayConfig &config, std::size_t n_users)
{
    const std::vector<std::size_t> paths(n_users, 1);
    return draw_realization(rng, config, paths);
}

// h = sqrt(N_t / P) * sum_p alpha_p a(phi_p)^H
inline CVector multipath_channel(std::span<const PathParams> paths, const ArrayConfig &config)
{
    if (paths.empty())
        throw ParameterError("multipath_channel: empty path list");
    const std::size_t n = config.n_tx();
    const double scale = std::sqrt(static_cast<double>(n) / static_cast<double>(paths.size()));
    CVector h(n);
    for (const PathParams &path : paths)
    {
        const CVector a = steering_vector(path.aod, config);
        for (std::size_t m = 0; m < n; ++m)
            h[m] += path.gain * std::conj(a[m]);
    }
    for (cplx &v : h)
        v *= scale;
    return h;
}

// h = sqrt(N_t) * alpha * a(phi)^H
inline CVector los_channel(const PathParams &path, const ArrayConfig &config)
{
    return multipath_channel(std::span<const PathParams>(&path, 1), config);
}

inline ChannelMatrix assemble_matrix(const ChannelRealization &real)
{
    if (real.users.empty())
        throw ParameterError("assemble_matrix: realization has no users");
    const std::size_t n = real.config.n_tx();
    ChannelMatrix h(real.users.size(), n);
    for (std::size_t k = 0; k < real.users.size(); ++k)
    {
        const CVector row = multipath_channel(real.users[k], real.config);
        std::copy(row.begin(), row.end(), h.row(k).begin());
    }
    return h;
}

} // namespace beamsat

#endif
