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

#include "risuav/scenario.hpp"

#include "risuav/energy.hpp"
#include "risuav/errors.hpp"
#include "risuav/linkbudget.hpp"

#include <algorithm>
#include <sstream>

namespace risuav {

double distance(const Vec3 &a, const Vec3 &b) { return (a - b).norm(); }

double elevation_cosine(const Vec3 &ris_pos, const Vec3 &node_pos) {
    if (!(ris_pos.z > node_pos.z))
        throw DomainError("elevation_cosine: node is not below the RIS plane");
    return (ris_pos.z - node_pos.z) / distance(ris_pos, node_pos);
}

double ris_aperture_diagonal(const RisSpec &ris) {
    const double a = static_cast<double>(ris.rows) * ris.pitch;
    const double b = static_cast<double>(ris.cols) * ris.pitch;
    return std::hypot(a, b);
}

double fraunhofer_distance(const RisSpec &ris, double lambda) {
    const double d = ris_aperture_diagonal(ris);
    return 2.0 * d * d / lambda;
}

std::vector<std::string> validate_ris(const RisSpec &ris) {
    std::vector<std::string> out;
    if (ris.rows < 1 || ris.cols < 1) out.emplace_back("ris: rows and cols must be >= 1");
    if (!(ris.pitch > 0.0)) out.emplace_back("ris: pitch must be > 0");
    if (!(ris.amplitude >= 0.0 && ris.amplitude <= 1.0)) out.emplace_back("ris: amplitude must lie in [0, 1]");
    if (!(ris.element_gain > 0.0)) out.emplace_back("ris: element_gain must be > 0");
    if (!(ris.per_element_power >= 0.0) || !(ris.controller_power >= 0.0))
        out.emplace_back("ris: powers must be >= 0");
    if (!(ris.areal_density > 0.0)) out.emplace_back("ris: areal_density must be > 0");
    return out;
}

std::vector<std::string> validate_uav(const UavSpec &uav) {
    std::vector<std::string> out;
    const std::string tag = "uav '" + uav.name + "': ";
    if (!(uav.empty_mass > 0.0)) out.push_back(tag + "empty_mass must be > 0");
    if (!(uav.base_flight_time > 0.0)) out.push_back(tag + "base_flight_time must be > 0");
    if (!(uav.rotor_disk_area > 0.0)) out.push_back(tag + "rotor_disk_area must be > 0");
    if (!(uav.figure_of_merit > 0.0 && uav.figure_of_merit <= 1.0))
        out.push_back(tag + "figure_of_merit must lie in (0, 1]");
    if (!(uav.max_payload > 0.0)) out.push_back(tag + "max_payload must be > 0");
    return out;
}

std::vector<std::string> validate_scenario(const Scenario &s, const RegulatoryProfile &reg) {
    std::vector<std::string> out;
    auto add = [&out](const std::string &msg) { out.push_back(msg); };
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };

    if (!(reg.max_altitude > 0.0)) add("regulatory: max_altitude must be > 0");
    if (!(s.carrier_frequency > 0.0)) add("carrier_frequency must be > 0");
    if (s.bs_antennas < 1) add("bs_antennas must be >= 1");
    if (!(s.bs_antenna_spacing > 0.0)) add("bs_antenna_spacing must be > 0");
    if (!s.bs_position.finite() || s.bs_position.z < 0.0) add("bs_position must be finite with z >= 0");
    if (s.users.empty()) add("users must not be empty");
    if (s.users.size() > s.bs_antennas)
        add("more users (" + std::to_string(s.users.size()) + ") than BS antennas (" +
            std::to_string(s.bs_antennas) + ")");
    for (std::size_t k = 0; k < s.users.size(); ++k)
        if (!s.users[k].finite() || s.users[k].z < 0.0)
            add("user " + std::to_string(k) + ": position must be finite with z >= 0");
    if (!(s.max_tx_power > 0.0)) add("max_tx_power must be > 0");
    if (!(s.noise_power > 0.0) && !s.reference_snr_db)
        add("noise_power must be > 0 unless reference_snr_db is given");

    if (s.region.degenerate()) {
        add("region is degenerate");
    } else {
        if (!s.region.contains(s.bs_position)) add("region does not contain the BS");
        for (std::size_t k = 0; k < s.users.size(); ++k)
            if (!s.region.contains(s.users[k])) add("region does not contain user " + std::to_string(k));
    }

    if (!(s.uav_altitude > 0.0)) add("uav_altitude must be > 0");
    if (s.uav_altitude > reg.max_altitude)
        add("altitude: uav_altitude " + fmt(s.uav_altitude) + " m exceeds the " + reg.country + " limit of " +
            fmt(reg.max_altitude) + " m");

    // One RIS unit per user, bijective.
    if (s.ris_units.size() != s.users.size())
        add("assignment: " + std::to_string(s.ris_units.size()) + " RIS units for " +
            std::to_string(s.users.size()) + " users");
    std::vector<int> served(s.users.size(), 0);
    for (std::size_t u = 0; u < s.ris_units.size(); ++u) {
        const RisUnit &unit = s.ris_units[u];
        const std::string tag = "ris_unit " + std::to_string(u) + ": ";
        if (unit.user >= s.users.size()) {
            add(tag + "assigned user index out of range");
        } else {
            ++served[unit.user];
        }
        for (const auto &m : validate_ris(unit.ris)) add(tag + m);
        for (const auto &m : validate_uav(unit.uav)) add(tag + m);
        if (unit.ris.pitch > 0.0 && unit.ris.areal_density > 0.0 && unit.uav.max_payload > 0.0) {
            const double mass = ris_mass(unit.ris);
            if (mass > unit.uav.max_payload)
                add(tag + "payload: RIS mass " + fmt(mass) + " kg exceeds max_payload " +
                    fmt(unit.uav.max_payload) + " kg of '" + unit.uav.name + "'");
        }
        // Any placement at the flight altitude keeps each link at least the
        // vertical clearance long, so that is the far-field bound to check.
        if (s.carrier_frequency > 0.0 && unit.ris.pitch > 0.0 && unit.user < s.users.size()) {
            const double lambda = wavelength(s.carrier_frequency);
            const double fd = fraunhofer_distance(unit.ris, lambda);
            const double clear_user = s.uav_altitude - s.users[unit.user].z;
            const double clear_bs = s.uav_altitude - s.bs_position.z;
            if (clear_user < fd)
                add(tag + "far-field: user link clearance " + fmt(clear_user) + " m below Fraunhofer distance " +
                    fmt(fd) + " m");
            if (clear_bs < fd)
                add(tag + "far-field: BS link clearance " + fmt(clear_bs) + " m below Fraunhofer distance " +
                    fmt(fd) + " m");
        }
    }
    for (std::size_t k = 0; k < served.size() && s.ris_units.size() == s.users.size(); ++k)
        if (served[k] != 1) add("assignment: user " + std::to_string(k) + " served by " +
                                std::to_string(served[k]) + " RIS units");
    return out;
}

std::vector<Vec3> grid_points(const EveGrid &grid) {
    if (grid.points_per_axis < 2) throw DomainError("eve grid needs at least 2 points per axis");
    if (!(grid.extent > 0.0)) throw DomainError("eve grid extent must be > 0");
    const std::size_t n = grid.points_per_axis;
    const double step = grid.extent / static_cast<double>(n - 1);
    const double x0 = grid.center.x - 0.5 * grid.extent;
    const double y0 = grid.center.y - 0.5 * grid.extent;
    std::vector<Vec3> pts;
    pts.reserve(n * n);
    for (std::size_t iy = 0; iy < n; ++iy)
        for (std::size_t ix = 0; ix < n; ++ix)
            pts.push_back({x0 + step * static_cast<double>(ix), y0 + step * static_cast<double>(iy), grid.z});
    return pts;
}

std::vector<Vec3> square_corners(const Vec3 &center, double side, double z) {
    const double h = 0.5 * side;
    return {{center.x + h, center.y + h, z},
            {center.x - h, center.y + h, z},
            {center.x - h, center.y - h, z},
            {center.x + h, center.y - h, z}};
}

std::pair<std::size_t, std::size_t> element_grid_shape(std::size_t n) {
    if (n == 0) throw DomainError("element count must be >= 1");
    std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (rows * rows > n) --rows;
    while (n % rows != 0) --rows;
    return {rows, n / rows};
}

UavSpec default_uav() {
    // Small quadcopter with 9" props; endurance figure is the vendor-style 50 min.
    return UavSpec{.name = "zeo_x4",
                   .empty_mass = 1.1,
                   .base_flight_time = 50.0 * 60.0,
                   .rotor_disk_area = 4.0 * std::numbers::pi * 0.1143 * 0.1143,
                   .figure_of_merit = 0.6,
                   .max_payload = 0.6};
}

RegulatoryProfile default_regulatory_profile() { return {"EU", 120.0}; }

Scenario default_scenario() {
    Scenario s;
    s.carrier_frequency = 28e9;
    const double lambda = wavelength(s.carrier_frequency);
    s.bs_position = {0.0, 0.0, 10.0};
    s.bs_antennas = 8;
    s.bs_antenna_spacing = 0.5 * lambda;
    s.users = square_corners(s.bs_position, 200.0, 1.5);
    RisSpec ris{.rows = 16,
                .cols = 16,
                .pitch = 0.5 * lambda,
                .amplitude = 1.0,
                .element_gain = std::numbers::pi,
                .per_element_power = 5e-3,
                .controller_power = 0.5,
                .areal_density = 3.0};
    for (std::size_t k = 0; k < s.users.size(); ++k) s.ris_units.push_back({ris, default_uav(), k});
    s.uav_altitude = 50.0;
    s.region = {-150.0, 150.0, -150.0, 150.0};
    s.max_tx_power = 0.2;
    s.power_budget_mode = PowerBudgetMode::PerUserCap;
    s.reference_snr_db = 0.0;
    return s;
}

}  // namespace risuav
