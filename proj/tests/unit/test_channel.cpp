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

#include "beamsat/channel.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <vector>

using namespace beamsat;

constexpr double pi = std::numbers::pi;

TEST(DrawRealization, GainHasUnitSecondMoment)
{
    Rng rng(101);
    const ArrayConfig cfg(1);
    const std::vector<std::size_t> paths(1000, 1);
    double sum = 0.0;
    std::size_t n = 0;
    for (int rep = 0; rep < 1000; ++rep)
        for (const auto &user : draw_realization(rng, cfg, paths).users)
        {
            sum += std::norm(user.front().gain);
            ++n;
        }
    ASSERT_EQ(n, 1000000u);
    EXPECT_NEAR(sum / static_cast<double>(n), 1.0, 0.005);
}

TEST(DrawRealization, GainComponentsAreIndependentHalfVariance)
{
    Rng rng(5);
    double re2 = 0.0, im2 = 0.0, cross = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const cplx z = rng.complex_gaussian();
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
        cross += z.real() * z.imag();
    }
    EXPECT_NEAR(re2 / n, 0.5, 0.005);
    EXPECT_NEAR(im2 / n, 0.5, 0.005);
    EXPECT_NEAR(cross / n, 0.0, 0.005);
}

TEST(DrawRealization, AnglesAreUniform)
{
    Rng rng(202);
    const ArrayConfig cfg(1);
    double sum = 0.0;
    std::vector<double> first;
    first.reserve(100000);
    const std::size_t paths[] = {4, 3, 3}; // ten paths per draw
    for (int rep = 0; rep < 100000; ++rep)
        for (const auto &user : draw_realization(rng, cfg, paths).users)
            for (const auto &p : user)
            {
                sum += p.aod.radians();
                if (first.size() < 100000)
                    first.push_back(p.aod.radians());
                EXPECT_GE(p.aod.radians(), 0.0);
                EXPECT_LT(p.aod.radians(), 2 * pi);
            }
    EXPECT_NEAR(sum / 1e6, pi, 0.01);
    EXPECT_LT(oracle::ks_uniform(first, 0.0, 2 * pi), 0.01);
}

TEST(DrawRealization, RejectsBadShapes)
{
    Rng rng(1);
    const ArrayConfig cfg(4);
    EXPECT_THROW(draw_realization(rng, cfg, std::vector<std::size_t>{}), ParameterError);
    EXPECT_THROW(draw_realization(rng, cfg, std::vector<std::size_t>{1, 0}), ParameterError);
}

TEST(DrawRealization, SameSeedSameRealization)
{
    const ArrayConfig cfg(8);
    const std::size_t paths[] = {1, 2, 3};
    Rng a = Rng::for_trial(42, 17);
    Rng b = Rng::for_trial(42, 17);
    const auto ra = draw_realization(a, cfg, paths);
    const auto rb = draw_realization(b, cfg, paths);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t p = 0; p < paths[k]; ++p)
        {
            EXPECT_EQ(ra.users[k][p].gain, rb.users[k][p].gain);
            EXPECT_EQ(ra.users[k][p].aod.radians(), rb.users[k][p].aod.radians());
        }
    Rng c = Rng::for_trial(42, 18);
    EXPECT_NE(draw_realization(c, cfg, paths).users[0][0].gain, ra.users[0][0].gain);
}

TEST(LosChannel, Examples)
{
    const auto h1 = los_channel({cplx(1.0), Angle(0.77)}, ArrayConfig(1));
    ASSERT_EQ(h1.size(), 1u);
    EXPECT_NEAR(std::abs(h1[0] - cplx(1.0)), 0.0, 1e-15);

    for (const cplx &v : los_channel({cplx(1.0), Angle(0.0)}, ArrayConfig(4, 0.5)))
        EXPECT_NEAR(std::abs(v - cplx(1.0)), 0.0, 1e-15);

    const ArrayConfig cfg(16, 0.5);
    const Angle phi(1.1);
    const auto h = los_channel({cplx(2.0), phi}, cfg);
    const auto a = steering_vector(phi, cfg);
    cplx g{};
    for (std::size_t m = 0; m < 16; ++m)
        g += h[m] * a[m];
    EXPECT_NEAR(std::abs(g - cplx(8.0)), 0.0, 1e-12);
}

TEST(LosChannel, NormIsSqrtNTimesGain)
{
    Rng rng(9);
    for (int i = 0; i < 200; ++i)
    {
        const ArrayConfig cfg(1 + static_cast<std::size_t>(rng.uniform() * 128), 0.1 + rng.uniform());
        const PathParams p{rng.complex_gaussian(), rng.uniform_angle()};
        double n2 = 0.0;
        for (const cplx &v : los_channel(p, cfg))
            n2 += std::norm(v);
        EXPECT_NEAR(std::sqrt(n2), std::sqrt(static_cast<double>(cfg.n_tx())) * std::abs(p.gain), 1e-12);
    }
}

TEST(LosChannel, RankOneGeometricStructure)
{
    // A single ray is a geometric sequence: every 2x2 Hankel minor h_m h_{m+2} - h_{m+1}^2
    // and every minor of the outer product h^H h vanish.
    Rng rng(10);
    const ArrayConfig cfg(32, 0.5);
    for (int i = 0; i < 100; ++i)
    {
        const auto h = los_channel({rng.complex_gaussian(), rng.uniform_angle()}, cfg);
        for (std::size_t m = 0; m + 2 < h.size(); ++m)
            EXPECT_NEAR(std::abs(h[m] * h[m + 2] - h[m + 1] * h[m + 1]), 0.0, 1e-10);
        for (std::size_t r = 0; r + 1 < h.size(); r += 5)
            for (std::size_t c = 0; c + 1 < h.size(); c += 7)
            {
                const cplx minor = std::conj(h[r]) * h[c] * std::conj(h[r + 1]) * h[c + 1] -
                                   std::conj(h[r]) * h[c + 1] * std::conj(h[r + 1]) * h[c];
                EXPECT_NEAR(std::abs(minor), 0.0, 1e-10);
            }
    }
}

TEST(MultipathChannel, SinglePathMatchesRaySum)
{
    const ArrayConfig cfg(12, 0.5);
    const PathParams p{cplx(0.3, -1.2), Angle(2.2)};
    const auto h = multipath_channel(std::vector<PathParams>{p}, cfg);
    const auto ref = oracle::ray_channel(12, 0.5, {p.gain}, {p.aod.radians()});
    const auto los = los_channel(p, cfg);
    for (std::size_t m = 0; m < 12; ++m)
    {
        EXPECT_NEAR(std::abs(h[m] - ref[m]), 0.0, 1e-13);
        EXPECT_NEAR(std::abs(h[m] - los[m]), 0.0, 1e-15);
    }
}

TEST(MultipathChannel, DuplicatedPathScalesBySqrtTwo)
{
    const ArrayConfig cfg(8, 0.5);
    const PathParams p{cplx(0.7, 0.4), Angle(0.5)};
    const auto one = los_channel(p, cfg);
    const auto two = multipath_channel(std::vector<PathParams>{p, p}, cfg);
    for (std::size_t m = 0; m < 8; ++m)
        EXPECT_NEAR(std::abs(two[m] - std::sqrt(2.0) * one[m]), 0.0, 1e-13);
}

TEST(MultipathChannel, EmptyPathListThrows)
{
    EXPECT_THROW(multipath_channel(std::vector<PathParams>{}, ArrayConfig(4)), ParameterError);
}

TEST(MultipathChannel, MeanSquaredNormIsNt)
{
    // Oracle: the ray sum evaluated directly over 1e5 independent three-path draws.
    const std::size_t n_tx = 16;
    const ArrayConfig cfg(n_tx, 0.5);
    Rng rng(303);
    const std::size_t paths[] = {3};
    double lib = 0.0, direct = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
    {
        const auto real = draw_realization(rng, cfg, paths);
        for (const cplx &v : multipath_channel(real.users[0], cfg))
            lib += std::norm(v);
        std::vector<cplx> gains;
        std::vector<double> angles;
        for (const auto &p : real.users[0])
        {
            gains.push_back(p.gain);
            angles.push_back(p.aod.radians());
        }
        for (const auto &v : oracle::ray_channel(n_tx, 0.5, gains, angles))
            direct += std::norm(v);
    }
    EXPECT_NEAR(lib / draws, static_cast<double>(n_tx), 0.02 * n_tx);
    EXPECT_NEAR(direct / draws, static_cast<double>(n_tx), 0.02 * n_tx);
    EXPECT_NEAR(lib, direct, 1e-9 * direct);
}

TEST(AssembleMatrix, SingleUser)
{
    const ArrayConfig cfg(6, 0.5);
    const PathParams p{cplx(1.5, 0.5), Angle(0.3)};
    const auto h = assemble_matrix({{{p}}, cfg});
    ASSERT_EQ(h.rows(), 1u);
    ASSERT_EQ(h.cols(), 6u);
    const auto row = los_channel(p, cfg);
    for (std::size_t m = 0; m < 6; ++m)
        EXPECT_EQ(h(0, m), row[m]);
}

TEST(AssembleMatrix, PermutationEquivariant)
{
    const ArrayConfig cfg(8, 0.5);
    const PathParams u0{cplx(1.0, 0.2), Angle(0.4)};
    const PathParams u1{cplx(-0.3, 0.9), Angle(4.0)};
    const auto h = assemble_matrix({{{u0}, {u1}}, cfg});
    const auto swapped = assemble_matrix({{{u1}, {u0}}, cfg});
    for (std::size_t m = 0; m < 8; ++m)
    {
        EXPECT_EQ(h(0, m), swapped(1, m));
        EXPECT_EQ(h(1, m), swapped(0, m));
    }
}

TEST(AssembleMatrix, MatchesRaySumElementwise)
{
    const ArrayConfig cfg(8, 0.5);
    const std::vector<PathParams> u0{{cplx(0.1, 1.0), Angle(1.0)}, {cplx(0.5, -0.5), Angle(5.5)}};
    const std::vector<PathParams> u1{{cplx(-1.1, 0.0), Angle(3.0)}};
    const auto h = assemble_matrix({{u0, u1}, cfg});
    const auto r0 = oracle::ray_channel(8, 0.5, {u0[0].gain, u0[1].gain}, {1.0, 5.5});
    const auto r1 = oracle::ray_channel(8, 0.5, {u1[0].gain}, {3.0});
    for (std::size_t m = 0; m < 8; ++m)
    {
        EXPECT_NEAR(std::abs(h(0, m) - r0[m]), 0.0, 1e-13);
        EXPECT_NEAR(std::abs(h(1, m) - r1[m]), 0.0, 1e-13);
    }
}
