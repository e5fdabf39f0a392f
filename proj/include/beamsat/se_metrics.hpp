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

#ifndef BEAMSAT_SE_METRICS_HPP
#define BEAMSAT_SE_METRICS_HPP

#include "beamsat/array_geometry.hpp"
#include "beamsat/beamforming.hpp"
#include "beamsat/channel.hpp"
#include "beamsat/errors.hpp"
#include "beamsat/rng.hpp"
#include "beamsat/snr.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace beamsat
{

enum class Scheme
{
    Abs,            // analog steering only
    Hbs,            // analog steering + digital ZF
    NoInterference, // analog steering with interference removed (diagonal equivalent channel)
};

inline std::string_view to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::Abs: return "ABS";
    case Scheme::Hbs: return "HBS";
    case Scheme::NoInterference: return "NoInterference";
    }
    return "unknown";
}

inline std::optional<Scheme> parse_scheme(std::string_view name)
{
    if (name == "ABS" || name == "abs")
        return Scheme::Abs;
    if (name == "HBS" || name == "hbs")
        return Scheme::Hbs;
    if (name == "NoInterference" || name == "nointerference" || name == "NI")
        return Scheme::NoInterference;
    return std::nullopt;
}

struct SePoint
{
    std::vector<double> per_stream_se; // bits/s/Hz, one per user
    Scheme scheme = Scheme::Abs;
};

struct MonteCarloEstimate
{
    double mean = 0.0;      // per-stream SE averaged over trials and streams
    double std_error = 0.0; // sample std / sqrt(trials * K)
    std::size_t n_trials = 0;
    std::size_t n_resampled = 0; // draws rejected for a singular equivalent channel
    std::vector<double> per_user_mean;

    // More than 0.1% of the trials needed a redraw.
    bool excessive_resampling() const noexcept { return n_resampled * 1000 > n_trials; }
};

struct Scenario
{
    ArrayConfig config;
    std::size_t n_users = 2;
    Scheme scheme = Scheme::Abs;
    SnrPoint rho = SnrPoint::from_db(0.0);
    std::size_t trials = 50000;
    std::uint64_t seed = 1;
};

// rho |h_k f_k|^2 / (rho sum_{i != k} |h_k f_i|^2 + 1)
inline double per_stream_sinr(const ChannelMatrix &h, const CMatrix &f, std::size_t k, SnrPoint rho)
{
    if (h.cols() != f.rows() || h.rows() != f.cols())
        throw ParameterError("per_stream_sinr: channel is " + std::to_string(h.rows()) + "x" +
                             std::to_string(h.cols()) + ", beamformer is " + std::to_string(f.rows()) + "x" +
                             std::to_string(f.cols()));
    if (k >= h.rows())
        throw ParameterError("per_stream_sinr: user index " + std::to_string(k) + " out of range");
    double signal = 0.0;
    double interference = 0.0;
    const auto hk = h.row(k);
    for (std::size_t i = 0; i < f.cols(); ++i)
    {
        cplx g{};
        for (std::size_t m = 0; m < hk.size(); ++m)
            g += hk[m] * f(m, i);
        (i == k ? signal : interference) += std::norm(g);
    }
    return rho.linear() * signal / (rho.linear() * interference + 1.0);
}

inline double per_stream_se(double sinr)
{
    if (!(sinr >= 0.0))
        throw ParameterError("per_stream_se: SINR must be non-negative");
    return std::log2(1.0 + sinr);
}

// SNR-free part of the SINR for every stream of one realization.
struct StreamGains
{
    std::vector<double> signal;       // |h_k f_k|^2
    std::vector<double> interference; // sum_{i != k} |h_k f_i|^2, zero for NoInterference
};

inline StreamGains stream_gains(const ChannelRealization &real, Scheme scheme)
{
    const ChannelMatrix h = assemble_matrix(real);
    const std::vector<Angle> angles = los_angles(real);
    const BeamformerSet bf = scheme == Scheme::Hbs ? hbs_beamformer(h, angles, real.config)
                                                   : abs_composite(build_rf_matrix(angles, real.config));
    const std::size_t k_users = h.rows();
    StreamGains out{std::vector<double>(k_users), std::vector<double>(k_users)};
    for (std::size_t k = 0; k < k_users; ++k)
    {
        const auto hk = h.row(k);
        for (std::size_t i = 0; i < k_users; ++i)
        {
            cplx g{};
            for (std::size_t m = 0; m < hk.size(); ++m)
                g += hk[m] * bf.composite(m, i);
            if (i == k)
                out.signal[k] = std::norm(g);
            else if (scheme != Scheme::NoInterference)
                out.interference[k] += std::norm(g);
        }
    }
    return out;
}

inline SePoint evaluate_se(const StreamGains &gains, Scheme scheme, SnrPoint rho)
{
    SePoint out{std::vector<double>(gains.signal.size()), scheme};
    const double r = rho.linear();
    for (std::size_t k = 0; k < gains.signal.size(); ++k)
        out.per_stream_se[k] = per_stream_se(r * gains.signal[k] / (r * gains.interference[k] + 1.0));
    return out;
}

namespace detail
{

inline constexpr std::size_t trials_per_block = 512;
inline constexpr int max_redraws = 100;

// Welford accumulator; merge() is Chan's pairwise update. Blocks are merged in block
// order, so the result does not depend on which thread ran which block.
struct Moments
{
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        n += 1.0;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }

    void merge(const Moments &o)
    {
        if (o.n == 0.0)
            return;
        if (n == 0.0)
        {
            *this = o;
            return;
        }
        const double total = n + o.n;
        const double delta = o.mean - mean;
        mean += delta * o.n / total;
        m2 += o.m2 + delta * delta * n * o.n / total;
        n = total;
    }
};

struct BlockResult
{
    std::vector<Moments> pooled;                // per SNR point
    std::vector<std::vector<double>> user_sums; // [snr][user]
    std::size_t resampled = 0;
};

} // namespace detail

// Monte Carlo over pure-LoS draws, evaluated at every SNR point on the same draws.
// Trial t always uses substream (seed, t); a draw whose equivalent channel is singular
// is replaced by the next draw from the same substream and counted in n_resampled.
inline std::vector<MonteCarloEstimate> run_monte_carlo_grid(const ArrayConfig &config, std::size_t n_users,
                                                            Scheme scheme, std::span<const SnrPoint> snrs,
                                                            std::size_t trials, std::uint64_t seed,
                                                            unsigned threads = 1)
{
    if (trials == 0)
        throw ParameterError("run_monte_carlo: trials must be >= 1");
    if (n_users == 0)
        throw ParameterError("run_monte_carlo: need at least one user");
    if (snrs.empty())
        throw ParameterError("run_monte_carlo: empty SNR list");

    const std::size_t n_blocks = (trials + detail::trials_per_block - 1) / detail::trials_per_block;
    std::vector<detail::BlockResult> blocks(n_blocks);

    auto run_block = [&](std::size_t b) {
        detail::BlockResult res;
        res.pooled.resize(snrs.size());
        res.user_sums.assign(snrs.size(), std::vector<double>(n_users, 0.0));
        const std::size_t first = b * detail::trials_per_block;
        const std::size_t last = std::min(trials, first + detail::trials_per_block);
        for (std::size_t t = first; t < last; ++t)
        {
            Rng rng = Rng::for_trial(seed, t);
            std::optional<StreamGains> gains;
            for (int attempt = 0; !gains; ++attempt)
            {
                if (attempt == detail::max_redraws)
                    throw SingularEquivalentChannel("run_monte_carlo: trial " + std::to_string(t) +
                                                    " stayed singular after repeated redraws");
                try
                {
                    gains = stream_gains(draw_los_realization(rng, config, n_users), scheme);
                }
                catch (const SingularEquivalentChannel &)
                {
                    ++res.resampled;
                }
            }
            for (std::size_t s = 0; s < snrs.size(); ++s)
            {
                const SePoint se = evaluate_se(*gains, scheme, snrs[s]);
                for (std::size_t k = 0; k < n_users; ++k)
                {
                    res.pooled[s].add(se.per_stream_se[k]);
                    res.user_sums[s][k] += se.per_stream_se[k];
                }
            }
        }
        blocks[b] = std::move(res);
    };

    const unsigned n_workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n_blocks)));
    if (n_workers == 1)
    {
        for (std::size_t b = 0; b < n_blocks; ++b)
            run_block(b);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> workers;
            workers.reserve(n_workers);
            for (unsigned w = 0; w < n_workers; ++w)
                workers.emplace_back([&] {
                    for (std::size_t b = next++; b < n_blocks; b = next++)
                    {
                        try
                        {
                            run_block(b);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                            next = n_blocks;
                        }
                    }
                });
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    std::vector<MonteCarloEstimate> out(snrs.size());
    std::size_t resampled = 0;
    for (const auto &blk : blocks)
        resampled += blk.resampled;
    for (std::size_t s = 0; s < snrs.size(); ++s)
    {
        detail::Moments total;
        std::vector<double> user_sum(n_users, 0.0);
        for (const auto &blk : blocks)
        {
            total.merge(blk.pooled[s]);
            for (std::size_t k = 0; k < n_users; ++k)
                user_sum[k] += blk.user_sums[s][k];
        }
        MonteCarloEstimate &est = out[s];
        est.mean = total.mean;
        est.std_error = total.n > 1.0 ? std::sqrt(total.m2 / (total.n - 1.0) / total.n) : 0.0;
        est.n_trials = trials;
        est.n_resampled = resampled;
        est.per_user_mean.resize(n_users);
        for (std::size_t k = 0; k < n_users; ++k)
            est.per_user_mean[k] = user_sum[k] / static_cast<double>(trials);
    }
    return out;
}

inline MonteCarloEstimate run_monte_carlo(const Scenario &sc, unsigned threads = 1)
{
    const SnrPoint rho[] = {sc.rho};
    return run_monte_carlo_grid(sc.config, sc.n_users, sc.scheme, rho, sc.trials, sc.seed, threads).front();
}

} // namespace beamsat

#endif
