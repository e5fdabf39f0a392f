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

#ifndef BEAMSAT_BEAMSAT_HPP
#define BEAMSAT_BEAMSAT_HPP

#include "beamsat/array_geometry.hpp"
#include "beamsat/beamforming.hpp"
#include "beamsat/bessel.hpp"
#include "beamsat/bounds.hpp"
#include "beamsat/channel.hpp"
#include "beamsat/errors.hpp"
#include "beamsat/experiment.hpp"
#include "beamsat/matrix.hpp"
#include "beamsat/rng.hpp"
#include "beamsat/se_metrics.hpp"
#include "beamsat/snr.hpp"

#endif
