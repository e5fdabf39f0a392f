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

// Prints the analog steering saturation level for a range of array sizes and user
// counts, next to the hybrid approximation at 30 dB.

#include "beamsat/bounds.hpp"

#include <cstdio>

int main()
{
    const double spacing = 0.5;
    const auto rho = beamsat::SnrPoint::from_db(30.0);
    std::printf("%6s %12s %12s %12s %14s\n", "N_t", "ABS K=2", "ABS K=3", "ABS K=5", "HBS 30 dB");
    for (std::size_t n_tx : {8, 16, 32, 64, 128, 256})
    {
        std::printf("%6zu", n_tx);
        for (std::size_t k : {2, 3, 5})
            std::printf(" %12.4f", beamsat::abs_saturation_bound(n_tx, spacing, k).value);
        std::printf(" %14.4f\n", beamsat::hbs_se_approx(rho, n_tx).value);
    }
}
