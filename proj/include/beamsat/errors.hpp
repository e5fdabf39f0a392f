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

#ifndef BEAMSAT_ERRORS_HPP
#define BEAMSAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beamsat
{

// Invalid argument: bad dimension, empty list, out-of-range index, non-finite value.
class ParameterError : public std::invalid_argument
{
public:
    explicit ParameterError(const std::string &what) : std::invalid_argument(what) {}
};

// The K x N_RF equivalent channel cannot be inverted (coincident or near-coincident users).
class SingularEquivalentChannel : public std::runtime_error
{
public:
    explicit SingularEquivalentChannel(const std::string &what) : std::runtime_error(what) {}
};

// A composite precoder column has zero norm and cannot be power-normalized.
class DegeneratePrecoder : public std::runtime_error
{
public:
    explicit DegeneratePrecoder(const std::string &what) : std::runtime_error(what) {}
};

} // namespace beamsat

#endif
