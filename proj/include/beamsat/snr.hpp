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

#ifndef BEAMSAT_SNR_HPP
#define BEAMSAT_SNR_HPP

#include "beamsat/errors.hpp"

#include <cmath>
#include <string>

namespace beamsat
{

// Per-user transmit SNR rho. Noise power is normalized to one, so rho is also the
// transmit power per stream.
class SnrPoint
{
public:
    static SnrPoint from_db(double db)
    {
        if (!std::isfinite(db))
            throw ParameterError("SnrPoint: dB value must be finite");
        return SnrPoint(std::pow(10.0, db / 10.0), db);
    }

    static SnrPoint from_linear(double linear)
    {
        if (!(linear > 0.0) || !std::isfinite(linear))
            throw ParameterError("SnrPoint: linear SNR must be positive and finite, got " + std::to_string(linear));
        return SnrPoint(linear, 10.0 * std::log10(linear));
    }

    double linear() const noexcept { return linear_; }
    double db() const noexcept { return db_; }

private:
    SnrPoint(double linear, double db) : linear_(linear), db_(db) {}

    double linear_;
    double db_;
};

} // namespace beamsat

#endif
