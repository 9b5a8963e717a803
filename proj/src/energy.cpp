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

#include "risuav/energy.hpp"

#include "risuav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risuav {

double ris_area(const RisSpec &ris) {
    return static_cast<double>(ris.rows) * ris.pitch * static_cast<double>(ris.cols) * ris.pitch;
}

double ris_mass(const RisSpec &ris) { return ris_area(ris) * ris.areal_density; }

double ris_power(std::size_t n_active, const RisSpec &ris) {
    if (n_active > ris.element_count())
        throw DomainError("ris_power: " + std::to_string(n_active) + " active elements on a " +
                          std::to_string(ris.element_count()) + "-element RIS");
    return static_cast<double>(n_active) * ris.per_element_power + ris.controller_power;
}

double hover_power(double total_mass, double rotor_disk_area, double figure_of_merit, double air_density) {
    if (!(total_mass > 0.0) || !(rotor_disk_area > 0.0) || !(figure_of_merit > 0.0) || !(air_density > 0.0))
        throw DomainError("hover_power: all inputs must be > 0");
    const double weight = total_mass * kGravity;
    return std::pow(weight, 1.5) / (figure_of_merit * std::sqrt(2.0 * air_density * rotor_disk_area));
}

double battery_energy(const UavSpec &uav) {
    return uav.base_flight_time * hover_power(uav.empty_mass, uav.rotor_disk_area, uav.figure_of_merit);
}

PowerBreakdown power_breakdown(const UavSpec &uav, const RisSpec &ris, std::size_t n_active) {
    PowerBreakdown p;
    p.hover_power = hover_power(uav.empty_mass + ris_mass(ris), uav.rotor_disk_area, uav.figure_of_merit);
    p.ris_controller_power = ris.controller_power;
    p.ris_element_power = ris_power(n_active, ris) - ris.controller_power;
    p.total = p.hover_power + p.ris_element_power + p.ris_controller_power;
    return p;
}

double flight_time(const UavSpec &uav, const RisSpec &ris, std::size_t n_active) {
    const double mass = ris_mass(ris);
    if (mass > uav.max_payload)
        throw DomainError("flight_time: RIS mass " + std::to_string(mass) + " kg exceeds the payload limit of '" +
                          uav.name + "'");
    return battery_energy(uav) / power_breakdown(uav, ris, n_active).total;
}

RisSpec ris_for_area(const RisSpec &base, double area, double nominal_pitch) {
    if (!(area > 0.0) || !(nominal_pitch > 0.0)) throw DomainError("ris_for_area: area and pitch must be > 0");
    const double side = std::sqrt(area);
    const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(side / nominal_pitch)));
    RisSpec out = base;
    out.rows = n;
    out.cols = n;
    out.pitch = side / static_cast<double>(n);
    return out;
}

double calibrate_areal_density(const UavSpec &uav, const RisSpec &ris_template, double area, double nominal_pitch,
                               double target_time) {
    RisSpec ris = ris_for_area(ris_template, area, nominal_pitch);
    const std::size_t n = ris.element_count();
    auto time_at = [&](double density) {
        ris.areal_density = density;
        return flight_time(uav, ris, n);
    };
    // Flight time falls monotonically with density; the payload limit caps it.
    double lo = 1e-9;
    double hi = uav.max_payload / area;
    if (!(time_at(lo) >= target_time) || !(time_at(hi) <= target_time))
        throw DomainError("calibrate_areal_density: target flight time not reachable within the payload limit");
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (time_at(mid) > target_time)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace risuav
