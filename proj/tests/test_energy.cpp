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

#include "catch_amalgamated.hpp"

#include "risuav/energy.hpp"
#include "risuav/errors.hpp"
#include "risuav/linkbudget.hpp"

#include <cmath>

using namespace risuav;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Momentum-theory endurance written out independently of the library.
double endurance_oracle(const UavSpec &u, double ris_kg, double ris_w) {
    auto p = [&](double m) { return std::pow(m * 9.81, 1.5) / (u.figure_of_merit * std::sqrt(2 * 1.225 * u.rotor_disk_area)); };
    return u.base_flight_time * p(u.empty_mass) / (p(u.empty_mass + ris_kg) + ris_w);
}

}  // namespace

TEST_CASE("RIS area and mass") {
    const RisSpec r{.rows = 20, .cols = 30, .pitch = 0.01, .areal_density = 3.0};
    CHECK_THAT(ris_area(r), WithinRel(0.06, 1e-12));
    CHECK_THAT(ris_mass(r), WithinRel(0.18, 1e-12));

    const double pitch = std::sqrt(0.037 / 256.0);
    CHECK_THAT(pitch, WithinAbs(0.0120, 5e-5));
    CHECK_THAT(ris_area(RisSpec{.rows = 8, .cols = 32, .pitch = pitch}), WithinRel(0.037, 1e-12));
}

TEST_CASE("RIS power draw") {
    RisSpec r{.rows = 16, .cols = 16, .per_element_power = 5e-3, .controller_power = 0.0};
    CHECK_THAT(ris_power(256, r), WithinRel(1.28, 1e-12));

    RisSpec big{.rows = 100, .cols = 102, .per_element_power = 10.56 / 10200.0, .controller_power = 0.0};
    CHECK_THAT(big.per_element_power * 1e3, WithinAbs(1.035, 5e-4));
    CHECK_THAT(ris_power(10200, big), WithinRel(10.56, 1e-12));

    r.controller_power = 0.5;
    CHECK(ris_power(0, r) == 0.5);
    CHECK_THROWS_AS(ris_power(257, r), DomainError);
}

TEST_CASE("hover power") {
    CHECK_THAT(hover_power(2.0, 0.5, 0.7), WithinAbs(112.2, 0.05));
    CHECK_THAT(hover_power(2.0, 0.5, 0.7), WithinRel(std::pow(19.62, 1.5) / (0.7 * std::sqrt(1.225)), 1e-12));
    CHECK(hover_power(8.0, 0.5, 0.7) / hover_power(2.0, 0.5, 0.7) == Catch::Approx(8.0));
    CHECK_THROWS_AS(hover_power(0.0, 0.5, 0.7), DomainError);
    CHECK_THROWS_AS(hover_power(1.0, -0.5, 0.7), DomainError);
    CHECK_THROWS_AS(hover_power(1.0, 0.5, 0.0), DomainError);
}

TEST_CASE("flight time without payload equals the base endurance") {
    const UavSpec u = default_uav();
    const RisSpec none{.rows = 1, .cols = 1, .pitch = 0.0, .per_element_power = 0.0, .controller_power = 0.0};
    CHECK_THAT(flight_time(u, none, 0), WithinRel(u.base_flight_time, 1e-14));
}

TEST_CASE("flight time matches the endurance oracle and enforces the payload") {
    const UavSpec u = default_uav();
    RisSpec r{.rows = 16, .cols = 16, .pitch = 0.015, .per_element_power = 5e-3, .controller_power = 0.5,
              .areal_density = 3.0};
    CHECK_THAT(flight_time(u, r, 256), WithinRel(endurance_oracle(u, ris_mass(r), ris_power(256, r)), 1e-12));
    const auto b = power_breakdown(u, r, 256);
    CHECK_THAT(b.total, WithinRel(b.hover_power + 1.28 + 0.5, 1e-12));
    r.areal_density = 1.01 * u.max_payload / ris_area(r);
    CHECK_THROWS_AS(flight_time(u, r, 256), DomainError);
}

TEST_CASE("RIS sized for an area") {
    const RisSpec base{.pitch = 0.0};
    const RisSpec r = ris_for_area(base, 0.09, 0.015);
    CHECK(r.rows == 20);
    CHECK(r.cols == 20);
    CHECK_THAT(ris_area(r), WithinRel(0.09, 1e-12));
    const RisSpec s = ris_for_area(base, 0.009, 0.015);
    CHECK_THAT(ris_area(s), WithinRel(0.009, 1e-12));
    CHECK_THROWS_AS(ris_for_area(base, 0.0, 0.015), DomainError);
}

TEST_CASE("areal density calibration against the 35 min endpoint") {
    const UavSpec u = default_uav();
    const double pitch = wavelength(10e9) / 2;
    RisSpec t = default_scenario().ris_units.front().ris;
    t.areal_density = calibrate_areal_density(u, t, 0.09, pitch, 35 * 60.0);
    const RisSpec hi = ris_for_area(t, 0.09, pitch);
    CHECK_THAT(flight_time(u, hi, hi.element_count()), WithinRel(35 * 60.0, 1e-9));

    const RisSpec lo = ris_for_area(t, 0.009, pitch);
    const double t_lo = flight_time(u, lo, lo.element_count());
    CHECK(std::abs(t_lo - 50 * 60.0) <= 0.1 * 50 * 60.0);

    const RisSpec mid = ris_for_area(t, 0.045, pitch);
    const double t_mid = flight_time(u, mid, mid.element_count());
    CHECK(t_mid < t_lo);
    CHECK(t_mid > 35 * 60.0);
    CHECK_THAT(t_mid, WithinRel(endurance_oracle(u, 0.045 * t.areal_density, ris_power(mid.element_count(), mid)), 1e-12));

    double prev = INFINITY;
    for (int i = 0; i <= 20; ++i) {
        const RisSpec r = ris_for_area(t, 0.009 + i * (0.09 - 0.009) / 20, pitch);
        const double ft = flight_time(u, r, r.element_count());
        CHECK(ft < prev);
        prev = ft;
    }
    CHECK_THROWS_AS(calibrate_areal_density(u, t, 0.09, pitch, 60 * 60.0), DomainError);
}
