// SPDX-License-Identifier: Apache-2.0
//
// risuav: simulation and optimization toolkit for RIS-carrying UAV networks
// Copyright (C) 2026 The risuav authors
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

#pragma once

#include "risuav/config.hpp"
#include "risuav/results.hpp"

#include <functional>
#include <string>

namespace risuav {

inline constexpr const char *kToolName = "risuav";
inline constexpr const char *kToolVersion = "0.1.0";

using ProgressSink = std::function<void(const std::string &)>;

/// Scenario of one coverage/secrecy sweep point: `elements` on a near-square
/// grid at the configured pitch, the given altitude, and noise calibrated to
/// `reference_snr_db`. Throws ValidationError when the point is infeasible.
Scenario sweep_point_scenario(const Config &cfg, std::size_t elements, double altitude, double reference_snr_db);

/// Run the experiment and return its table. Rows are ordered by the axes in
/// declaration order, last axis fastest. Every failure names the sweep point.
ResultTable run_experiment(const Config &cfg, const ExperimentSpec &spec, const ProgressSink &progress = {});

}  // namespace risuav
