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

#include "risuav/scenario.hpp"

#include <cstddef>

namespace risuav {

inline constexpr double kGravity = 9.81;         // m/s^2
inline constexpr double kSeaLevelAirDensity = 1.225;  // kg/m^3

struct PowerBreakdown {
    double hover_power = 0.0;
    double ris_element_power = 0.0;
    double ris_controller_power = 0.0;
    double total = 0.0;
};

double ris_area(const RisSpec &ris);
double ris_mass(const RisSpec &ris);

/// Electrical draw of the RIS with `n_active` elements switched on.
/// Throws DomainError if n_active exceeds the element count.
double ris_power(std::size_t n_active, const RisSpec &ris);

/// Induced hover power from momentum theory, corrected by the rotor figure of merit:
///
///   P = (m g)^(3/2) / (FoM sqrt(2 rho A))
double hover_power(double total_mass, double rotor_disk_area, double figure_of_merit,
                   double air_density = kSeaLevelAirDensity);

// Battery energy implied by the unloaded endurance: base_flight_time * hover_power(empty_mass).
double battery_energy(const UavSpec &uav);

PowerBreakdown power_breakdown(const UavSpec &uav, const RisSpec &ris, std::size_t n_active);

/// Hover endurance in seconds while carrying and powering `ris`.
/// Throws DomainError when the RIS mass exceeds the UAV payload limit.
double flight_time(const UavSpec &uav, const RisSpec &ris, std::size_t n_active);

/// RIS of (approximately) square shape covering exactly `area` m^2, with the
/// pitch adjusted from `nominal_pitch` so that the element grid fills the area.
RisSpec ris_for_area(const RisSpec &base, double area, double nominal_pitch);

/// Areal density for which flight_time(uav, ris_for_area(template, area, pitch),
/// all elements) equals `target_time`. Solved by bisection; throws DomainError
/// when the target is not bracketed by the payload limit.
double calibrate_areal_density(const UavSpec &uav, const RisSpec &ris_template, double area, double nominal_pitch,
                               double target_time);

}  // namespace risuav
