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

#include "risuav/optim.hpp"
#include "risuav/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace risuav {

enum class ExperimentKind { PathlossSweep, FlighttimeSweep, Coverage, Secrecy };

const char *to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

struct SweepAxes {
    std::vector<std::size_t> elements;
    std::vector<double> frequencies_hz;
    std::vector<double> altitudes_m;
    std::vector<double> reference_snr_db;
    std::vector<double> areas_m2;
    std::vector<std::string> uav_models;
};

// Solve for the areal density that gives `flight_time` s on `uav` at `area`.
struct DensityCalibration {
    std::string uav;
    double area_m2 = 0.0;
    double flight_time_s = 0.0;
};

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Coverage;
    SweepAxes axes;
    std::string output;
    std::uint64_t seed = 42;
    std::optional<DensityCalibration> calibration;
};

struct Catalogs {
    std::vector<UavSpec> uavs;
    std::vector<RegulatoryProfile> regulatory;

    const UavSpec &uav(std::string_view name) const;  // throws ConfigError
};

struct Config {
    Scenario scenario;
    RegulatoryProfile regulatory;
    Catalogs catalogs;
    EveGrid eve_grid;
    PsoParams pso;
    CdParams cd;
    // RIS pitch in wavelengths; sweeps over frequency keep it fixed.
    double ris_pitch_wavelengths = 0.5;
    std::optional<ExperimentSpec> experiment;
    std::string config_hash;
    // Keys not present in the file, with the default that was applied.
    std::vector<std::pair<std::string, std::string>> defaults_applied;
};

std::string fnv1a_hex(std::string_view text);

/// Parse the YAML configuration text. Throws ConfigError with the key path and
/// line on malformed input. Does not validate the scenario.
Config parse_config(std::string_view text);

// Read and parse without validating.
Config parse_config_file(const std::filesystem::path &path);

std::vector<std::string> validate_config(const Config &cfg);

/// Read, parse and validate. Validation failures throw ValidationError listing
/// every violation.
Config load_config(const std::filesystem::path &path);

// The configuration equivalent to default_scenario(), as YAML text.
std::string default_config_text();

}  // namespace risuav
