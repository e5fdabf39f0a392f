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

// Independent reference computations for the test suites. Nothing here calls into
// the library's numerical routines; each oracle re-derives its quantity from first
// principles (high-precision series, brute-force sums, quadrature, sampling).

#ifndef BEAMSAT_TESTS_ORACLES_HPP
#define BEAMSAT_TESTS_ORACLES_HPP

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle
{

using mp_real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<260>>;

// J0 by its ascending series in 260-digit arithmetic. At x = 450 the largest term is
// ~1e193, so ~200 digits cancel; terms are summed until well past the peak and below 1e-40.
inline double bessel_j0_series(double x)
{
    const mp_real q = -mp_real(x) * mp_real(x) / 4;
    mp_real term = 1;
    mp_real sum = 1;
    for (int m = 1;; ++m)
    {
        term *= q;
        term /= mp_real(m) * mp_real(m);
        sum += term;
        if (m > x && abs(term) < mp_real("1e-40"))
            break;
    }
    return static_cast<double>(sum);
}

// Double-precision series with a fixed term count, valid for small |x|.
inline double bessel_j0_series_short(double x, int terms = 30)
{
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < terms; ++m)
    {
        term *= -x * x / (4.0 * m * m);
        sum += term;
    }
    return sum;
}

// First `count` positive zeros of J0: sign changes on a 0.1 grid, refined by bisection
// on the high-precision series.
inline std::vector<double> bessel_j0_zeros(int count)
{
    std::vector<double> zeros;
    double a = 0.1;
    double fa = bessel_j0_series(a);
    while (static_cast<int>(zeros.size()) < count)
    {
        const double b = a + 0.1;
        const double fb = bessel_j0_series(b);
        if ((fa > 0) != (fb > 0))
        {
            double lo = a, hi = b, flo = fa;
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
            {
                const double mid = 0.5 * (lo + hi);
                const double fm = bessel_j0_series(mid);
                if ((fm > 0) == (flo > 0))
                {
                    lo = mid;
                    flo = fm;
                }
                else
                    hi = mid;
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return zeros;
}

// |sum_m exp(j m dz)|^2 / N^2, summed term by term.
inline double correlation_sq(std::size_t n_tx, double d, double phi1, double phi2)
{
    const double dz = 2.0 * std::numbers::pi * d * (std::sin(phi2) - std::sin(phi1));
    std::complex<double> s{};
    for (std::size_t m = 0; m < n_tx; ++m)
        s += std::polar(1.0, static_cast<double>(m) * dz);
    const double n = static_cast<double>(n_tx);
    return std::norm(s) / (n * n);
}

struct Estimate
{
    double mean;
    double std_error;
};

// Brute-force E|a(phi1)^H a(phi2)|^2 over independent uniform angle pairs.
inline Estimate correlation_monte_carlo(std::size_t n_tx, double d, std::size_t pairs, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double mean = 0.0, m2 = 0.0;
    for (std::size_t i = 1; i <= pairs; ++i)
    {
        const double x = correlation_sq(n_tx, d, angle(gen), angle(gen));
        const double delta = x - mean;
        mean += delta / static_cast<double>(i);
        m2 += delta * (x - mean);
    }
    const double var = m2 / static_cast<double>(pairs - 1);
    return {mean, std::sqrt(var / static_cast<double>(pairs))};
}

// Same expectation by a tensor-product trapezoid rule on [0, 2pi)^2. The integrand is
// smooth and periodic, so the rule converges geometrically once the grid resolves the
// highest angular frequency (~2 pi d N_t).
inline double correlation_quadrature(std::size_t n_tx, double d, std::size_t grid)
{
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
    std::vector<double> sines(grid);
    for (std::size_t i = 0; i < grid; ++i)
        sines[i] = std::sin(h * static_cast<double>(i));
    double acc = 0.0;
    const double n = static_cast<double>(n_tx);
    for (std::size_t i = 0; i < grid; ++i)
        for (std::size_t j = 0; j < grid; ++j)
        {
            const double dz = 2.0 * std::numbers::pi * d * (sines[j] - sines[i]);
            // Dirichlet kernel evaluated by direct summation of the phasors
            std::complex<double> s{};
            const std::complex<double> step = std::polar(1.0, dz);
            std::complex<double> p{1.0, 0.0};
            for (std::size_t m = 0; m < n_tx; ++m)
            {
                s += p;
                p *= step;
            }
            acc += std::norm(s) / (n * n);
        }
    return acc / static_cast<double>(grid * grid);
}

// E[log2(1 + c X)] for X ~ Exp(1), i.e. |alpha|^2 with alpha ~ CN(0, 1), by quadrature.
inline double expected_log2_1p(double c)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [c](double x) { return std::log2(1.0 + c * x) * std::exp(-x); };
    return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

// Kolmogorov-Smirnov distance between a sample and the uniform law on [lo, hi).
inline double ks_uniform(std::vector<double> xs, double lo, double hi)
{
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        const double cdf = (xs[i] - lo) / (hi - lo);
        d = std::max({d, static_cast<double>(i + 1) / n - cdf, cdf - static_cast<double>(i) / n});
    }
    return d;
}

using Dense = std::vector<std::vector<std::complex<double>>>;

inline Dense dense_product(const Dense &a, const Dense &b)
{
    Dense out(a.size(), std::vector<std::complex<double>>(b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.front().size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Channel row of one user straight from the ray sum: sqrt(N/P) sum_p alpha_p exp(-j m 2 pi d sin phi_p).
inline std::vector<std::complex<double>> ray_channel(std::size_t n_tx, double d,
                                                     const std::vector<std::complex<double>> &gains,
                                                     const std::vector<double> &angles)
{
    std::vector<std::complex<double>> h(n_tx);
    const double scale = std::sqrt(static_cast<double>(n_tx) / static_cast<double>(gains.size()));
    for (std::size_t p = 0; p < gains.size(); ++p)
        for (std::size_t m = 0; m < n_tx; ++m)
            h[m] += scale * gains[p] / std::sqrt(static_cast<double>(n_tx)) *
                    std::exp(std::complex<double>(0.0, -2.0 * std::numbers::pi * d * static_cast<double>(m) *
                                                           std::sin(angles[p])));
    return h;
}

} // namespace oracle

#endif
