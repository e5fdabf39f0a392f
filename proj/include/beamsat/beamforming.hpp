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

#ifndef BEAMSAT_BEAMFORMING_HPP
#define BEAMSAT_BEAMFORMING_HPP

#include "beamsat/array_geometry.hpp"
#include "beamsat/channel.hpp"
#include "beamsat/errors.hpp"
#include "beamsat/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace beamsat
{

// Pivots smaller than this fraction of the largest matrix entry mark the equivalent
// channel as singular.
inline constexpr double singular_pivot_tolerance = 1e-12;

// Analog steering matrix, N_t x N_RF. Column k steers toward user k's angle.
class RfMatrix
{
public:
    explicit RfMatrix(CMatrix columns) : columns_(std::move(columns)) {}

    const CMatrix &matrix() const noexcept { return columns_; }
    std::size_t n_tx() const noexcept { return columns_.rows(); }
    std::size_t n_rf() const noexcept { return columns_.cols(); }

private:
    CMatrix columns_;
};

// Baseband precoder, N_RF x K, kept in extended precision. For nearly collinear
// users the ZF weights are large and cancel when combined through the RF matrix;
// double rounding there would leak interference well above 1e-8 of the signal.
struct DigitalPrecoder
{
    CMatrixExt weights;
};

struct BeamformerSet
{
    RfMatrix rf;
    std::optional<DigitalPrecoder> digital; // empty for pure analog steering
    CMatrix composite;                      // N_t x K, column k feeds stream k
};

// Analog beam toward user k: the steering vector at its LoS angle.
inline CVector abs_beamformer(Angle phi, const ArrayConfig &config)
{
    return steering_vector(phi, config);
}

inline RfMatrix build_rf_matrix(std::span<const Angle> angles, const ArrayConfig &config)
{
    if (angles.empty())
        throw ParameterError("build_rf_matrix: need at least one angle");
    CMatrix f(config.n_tx(), angles.size());
    for (std::size_t k = 0; k < angles.size(); ++k)
        f.set_column(k, abs_beamformer(angles[k], config));
    return RfMatrix(std::move(f));
}

// Steering angle of each user: the AoD of its first (LoS) path.
inline std::vector<Angle> los_angles(const ChannelRealization &real)
{
    std::vector<Angle> angles;
    angles.reserve(real.users.size());
    for (const auto &paths : real.users)
        angles.push_back(paths.front().aod);
    return angles;
}

// H_hat = H F_RF (K x N_RF), accumulated in extended precision.
inline CMatrixExt equivalent_channel(const ChannelMatrix &h, const RfMatrix &rf)
{
    if (h.cols() != rf.n_tx())
        throw ParameterError("equivalent_channel: channel has " + std::to_string(h.cols()) +
                             " antennas, RF matrix has " + std::to_string(rf.n_tx()));
    return matrix_cast<cplx_ext>(h) * matrix_cast<cplx_ext>(rf.matrix());
}

// Unnormalized zero-forcing precoder W = H_hat^H (H_hat H_hat^H)^-1, so H_hat W = I.
// With N_RF == K this is H_hat^-1, which is computed directly rather than through the
// Gram matrix (whose condition number is the square of H_hat's).
inline DigitalPrecoder zf_precoder(const CMatrixExt &h_hat)
{
    if (h_hat.empty())
        throw ParameterError("zf_precoder: empty equivalent channel");
    if (h_hat.rows() > h_hat.cols())
        throw ParameterError("zf_precoder: more users than RF chains");

    if (h_hat.rows() == h_hat.cols())
    {
        auto inv = invert(h_hat, singular_pivot_tolerance);
        if (!inv)
            throw SingularEquivalentChannel("zf_precoder: equivalent channel is singular");
        return {std::move(*inv)};
    }

    const CMatrixExt h_hat_h = conj_transpose(h_hat);
    auto gram_inv = invert(h_hat * h_hat_h, singular_pivot_tolerance);
    if (!gram_inv)
        throw SingularEquivalentChannel("zf_precoder: equivalent channel Gram matrix is singular");
    return {h_hat_h * *gram_inv};
}

// Scales each column w_k by 1 / ||F_RF w_k|| so every stream leaves the array with unit power.
inline DigitalPrecoder vector_normalize(DigitalPrecoder w, const RfMatrix &rf)
{
    if (w.weights.rows() != rf.n_rf())
        throw ParameterError("vector_normalize: precoder rows do not match RF chains");
    const CMatrixExt composite = matrix_cast<cplx_ext>(rf.matrix()) * w.weights;
    for (std::size_t k = 0; k < composite.cols(); ++k)
    {
        const long double norm = column_norm(composite, k);
        if (!(norm > 0.0L) || !std::isfinite(norm))
            throw DegeneratePrecoder("vector_normalize: composite column " + std::to_string(k) + " has zero norm");
        for (std::size_t r = 0; r < w.weights.rows(); ++r)
            w.weights(r, k) /= norm;
    }
    return w;
}

// F_HBS = F_RF W, formed in extended precision and rounded once.
inline BeamformerSet hbs_composite(RfMatrix rf, DigitalPrecoder w)
{
    if (w.weights.rows() != rf.n_rf())
        throw ParameterError("hbs_composite: precoder has " + std::to_string(w.weights.rows()) +
                             " rows for " + std::to_string(rf.n_rf()) + " RF chains");
    CMatrix composite = matrix_cast<cplx>(matrix_cast<cplx_ext>(rf.matrix()) * w.weights);
    return {std::move(rf), std::move(w), std::move(composite)};
}

// Pure analog steering: the composite is the RF matrix itself.
inline BeamformerSet abs_composite(RfMatrix rf)
{
    CMatrix composite = rf.matrix();
    return {std::move(rf), std::nullopt, std::move(composite)};
}

// Full hybrid chain for one realization: steer, ZF on the equivalent channel, normalize.
inline BeamformerSet hbs_beamformer(const ChannelMatrix &h, std::span<const Angle> angles,
                                    const ArrayConfig &config)
{
    RfMatrix rf = build_rf_matrix(angles, config);
    DigitalPrecoder w = vector_normalize(zf_precoder(equivalent_channel(h, rf)), rf);
    return hbs_composite(std::move(rf), std::move(w));
}

} // namespace beamsat

#endif
