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

#include <cmath>
#include <numbers>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace risuav {

// Position in meters. z is the altitude above the ground plane z = 0.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3 &a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Vec3 &, const Vec3 &) = default;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

/// Planar reflecting surface. Elements sit on a rows x cols grid with the same
/// center-to-center pitch on both axes; the surface is horizontal and faces down.
struct RisSpec {
    std::size_t rows = 16;
    std::size_t cols = 16;
    double pitch = 0.0;              // m
    double amplitude = 1.0;          // reflection amplitude in [0, 1]
    double element_gain = std::numbers::pi;      // linear
    double per_element_power = 0.0;  // W per active element
    double controller_power = 0.0;   // W
    double areal_density = 3.0;      // kg/m^2

    std::size_t element_count() const { return rows * cols; }
};

/// Rotary-wing airframe. base_flight_time is the hover endurance without payload.
struct UavSpec {
    std::string name;
    double empty_mass = 0.0;        // kg
    double base_flight_time = 0.0;  // s
    double rotor_disk_area = 0.0;   // m^2, summed over rotors
    double figure_of_merit = 0.7;
    double max_payload = 0.0;       // kg
};

struct RegulatoryProfile {
    std::string country;
    double max_altitude = 120.0;  // m
};

// Axis-aligned horizontal search region.
struct Region {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    bool contains(const Vec3 &p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    bool degenerate() const { return !(x_max > x_min) || !(y_max > y_min); }
};

enum class PowerBudgetMode { PerUserCap, SumBudget };

// One RIS carried by one UAV, serving exactly one user.
struct RisUnit {
    RisSpec ris;
    UavSpec uav;
    std::size_t user = 0;
};

struct Scenario {
    Vec3 bs_position;
    std::size_t bs_antennas = 8;
    double bs_antenna_spacing = 0.0;  // m
    double carrier_frequency = 0.0;   // Hz
    std::vector<Vec3> users;
    std::vector<RisUnit> ris_units;
    double uav_altitude = 50.0;  // m
    Region region;
    double max_tx_power = 0.2;  // W
    PowerBudgetMode power_budget_mode = PowerBudgetMode::PerUserCap;
    double noise_power = 0.0;  // W; derived from reference_snr_db when that is set
    std::optional<double> reference_snr_db;
};

// Square grid of candidate eavesdropper positions.
struct EveGrid {
    Vec3 center;
    double extent = 100.0;  // m, side of the square
    std::size_t points_per_axis = 21;
    double z = 1.5;  // m
};

double distance(const Vec3 &a, const Vec3 &b);

/// Cosine of the angle between the downward normal of a horizontal RIS at
/// `ris_pos` and the direction towards `node_pos`.
/// Throws DomainError when the node is not strictly below the RIS.
double elevation_cosine(const Vec3 &ris_pos, const Vec3 &node_pos);

double ris_aperture_diagonal(const RisSpec &ris);

/// 2 D^2 / lambda, D being the aperture diagonal.
double fraunhofer_distance(const RisSpec &ris, double lambda);

/// All invariant violations of `s` under `reg`, as human readable messages.
/// An empty result means the scenario is valid.
std::vector<std::string> validate_scenario(const Scenario &s, const RegulatoryProfile &reg);

std::vector<std::string> validate_ris(const RisSpec &ris);
std::vector<std::string> validate_uav(const UavSpec &uav);

// Grid points in row-major order (y outer, x inner), all at height grid.z.
std::vector<Vec3> grid_points(const EveGrid &grid);

// Four users at the corners of a square centered on `center` (horizontally), at height z.
std::vector<Vec3> square_corners(const Vec3 &center, double side, double z);

// Largest divisor of n not above sqrt(n), paired with n / divisor.
std::pair<std::size_t, std::size_t> element_grid_shape(std::size_t n);

// Built-in reference scenario: four users on a 200 m square around the BS,
// one 16x16 RIS per user at half-wavelength pitch, 28 GHz carrier.
Scenario default_scenario();
UavSpec default_uav();
RegulatoryProfile default_regulatory_profile();

}  // namespace risuav
