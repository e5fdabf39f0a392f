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

#ifndef BEAMSAT_BOUNDS_HPP
#define BEAMSAT_BOUNDS_HPP

#include "beamsat/array_geometry.hpp"
#include "beamsat/bessel.hpp"
#include "beamsat/errors.hpp"
#include "beamsat/snr.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>

namespace beamsat
{

// Rayleigh scale of a CN(0, 1) gain: each quadrature component has variance 1/2.
inline const double unit_power_sigma = 1.0 / std::numbers::sqrt2;

enum class BoundKind
{
    AbsSaturationK2,
    AbsSaturationKGt2,
    HbsApprox,
};

inline std::string_view to_string(BoundKind kind)
{
    switch (kind)
    {
    case BoundKind::AbsSaturationK2: return "AbsSaturationK2";
    case BoundKind::AbsSaturationKGt2: return "AbsSaturationKGt2";
    case BoundKind::HbsApprox: return "HbsApprox";
    }
    return "unknown";
}

struct BoundParams
{
    std::size_t n_tx = 0;
    double spacing = 0.0;
    std::size_t n_users = 0;
    std::optional<double> rho;   // HbsApprox only
    std::optional<double> sigma; // HbsApprox only
};

struct BoundResult
{
    double value = 0.0; // bits/s/Hz
    BoundKind kind = BoundKind::AbsSaturationK2;
    BoundParams params;
};

// S = 1 + 2 sum_{i=1}^{N_t-1} (1 - i/N_t) J0(2 pi d i)^2, summed from i = N_t-1 down
// (small terms first) in long double.
inline double correlation_sum(std::size_t n_tx, double spacing)
{
    if (n_tx == 0)
        throw ParameterError("correlation_sum: n_tx must be >= 1");
    if (!(spacing > 0.0))
        throw ParameterError("correlation_sum: spacing must be positive");
    const long double n = static_cast<long double>(n_tx);
    long double acc = 0.0L;
    for (std::size_t i = n_tx - 1; i >= 1; --i)
    {
        const long double j0 = bessel_j0(2.0 * std::numbers::pi * spacing * static_cast<double>(i));
        acc += (1.0L - static_cast<long double>(i) / n) * j0 * j0;
    }
    return static_cast<double>(1.0L + 2.0L * acc);
}

// E|a(phi1)^H a(phi2)|^2 for independent angles uniform on [0, 2 pi). With unit-norm
// steering vectors this is S / N_t (the N_t terms of the double sum each carry 1/N_t^2).
inline double cross_correlation_expectation(std::size_t n_tx, double spacing)
{
    return correlation_sum(n_tx, spacing) / static_cast<double>(n_tx);
}

// High-SNR saturation level of the analog steering per-stream SE with K users:
// log2(1 + N_t^2 / ((K-1)^2 S)). K = 2 gives the two-user expression directly.
inline BoundResult abs_saturation_bound(std::size_t n_tx, double spacing, std::size_t n_users)
{
    if (n_users < 2)
        throw ParameterError("abs_saturation_bound: needs K >= 2 (no interference otherwise)");
    const double n = static_cast<double>(n_tx);
    const double km1 = static_cast<double>(n_users - 1);
    const double s = correlation_sum(n_tx, spacing);
    BoundResult out;
    out.value = std::log2(1.0 + n * n / (km1 * km1 * s));
    out.kind = n_users == 2 ? BoundKind::AbsSaturationK2 : BoundKind::AbsSaturationKGt2;
    out.params = {n_tx, spacing, n_users, std::nullopt, std::nullopt};
    return out;
}

// Error of replacing sum_i c_i^2 by (sum_i c_i)^2 / (K-1) over the interferers of user k,
// with c_i = |a(phi_k)^H a(phi_i)|:  Gamma = 1/2 sum_{i,j != k} (c_i - c_j)^2.
inline double gamma_error(std::span<const Angle> angles, std::size_t k, const ArrayConfig &config)
{
    if (k >= angles.size())
        throw ParameterError("gamma_error: user index out of range");
    const CVector ak = steering_vector(angles[k], config);
    std::vector<double> corr;
    corr.reserve(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i)
    {
        if (i == k)
            continue;
        const CVector ai = steering_vector(angles[i], config);
        cplx dot{};
        for (std::size_t m = 0; m < ak.size(); ++m)
            dot += std::conj(ak[m]) * ai[m];
        corr.push_back(std::abs(dot));
    }
    double gamma = 0.0;
    for (double ci : corr)
        for (double cj : corr)
            gamma += (ci - cj) * (ci - cj);
    return 0.5 * gamma;
}

// Mean of ln R for R Rayleigh with scale `scale`: ln(scale) + ln2/2 - gamma_E/2.
inline double log_rayleigh_mean(double scale)
{
    if (!(scale > 0.0))
        throw ParameterError("log_rayleigh_mean: scale must be positive");
    return std::log(scale) + 0.5 * std::numbers::ln2 - 0.5 * std::numbers::egamma;
}

// Interference-free large-array approximation of the hybrid per-stream SE:
// (2 / ln 2) * E[ln(sqrt(rho N_t) |alpha|)] with |alpha| Rayleigh(sigma).
inline BoundResult hbs_se_approx(SnrPoint rho, std::size_t n_tx, double sigma = unit_power_sigma)
{
    if (n_tx == 0)
        throw ParameterError("hbs_se_approx: n_tx must be >= 1");
    if (!(sigma > 0.0))
        throw ParameterError("hbs_se_approx: sigma must be positive");
    const double scale = std::sqrt(rho.linear() * static_cast<double>(n_tx)) * sigma;
    BoundResult out;
    out.value = 2.0 / std::numbers::ln2 * log_rayleigh_mean(scale);
    out.kind = BoundKind::HbsApprox;
    out.params = {n_tx, 0.0, 0, rho.linear(), sigma};
    return out;
}

} // namespace beamsat

#endif
