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

#include "risuav/errors.hpp"
#include "risuav/linkbudget.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace risuav;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

RisSpec square_ris(std::size_t n, double pitch) { return RisSpec{.rows = n, .cols = n, .pitch = pitch}; }

}  // namespace

TEST_CASE("wavelength") {
    CHECK_THAT(wavelength(28e9), WithinAbs(0.01071, 5e-6));
    CHECK_THAT(wavelength(10e9), WithinAbs(0.02998, 5e-6));
    CHECK(wavelength(kSpeedOfLight) == 1.0);
    CHECK_THROWS_AS(wavelength(0.0), DomainError);
    CHECK_THROWS_AS(wavelength(-1.0), DomainError);
}

TEST_CASE("path loss golden value at 150 m, 10 GHz, 16x16") {
    const double lambda = kSpeedOfLight / 10e9;
    const double pitch = lambda / 2;
    const LinkGeometry g{150.0, 150.0, 1.0, 1.0};
    const double pi = std::numbers::pi;
    const double oracle = 64 * pi * pi * pi * std::pow(150.0, 4) / (pi * std::pow(256.0, 2) * pitch * pitch * lambda * lambda);
    const double pl = ris_path_loss(g, square_ris(16, pitch), lambda);
    CHECK_THAT(pl, WithinRel(oracle, 1e-12));
    CHECK_THAT(10 * std::log10(pl), WithinAbs(133.83142004587432, 1e-9));
}

TEST_CASE("path loss falls with elements and rises with frequency") {
    const Vec3 bs{0, 0, 10}, user{100, 100, 1.5}, ris{50, 50, 50};
    const LinkGeometry g = link_geometry(bs, ris, user);
    for (double f : {2.4e9, 4.25e9, 10e9, 28e9}) {
        const double lambda = wavelength(f);
        double prev = INFINITY;
        for (std::size_t n : {4, 8, 16, 32}) {
            const double pl = ris_path_loss(g, square_ris(n, lambda / 2), lambda);
            CHECK(pl < prev);
            prev = pl;
        }
    }
    for (std::size_t n : {4, 8, 16, 32}) {
        double prev = 0.0;
        for (double f : {2.4e9, 4.25e9, 10e9, 28e9}) {
            const double lambda = wavelength(f);
            const double pl = ris_path_loss(g, square_ris(n, lambda / 2), lambda);
            CHECK(pl > prev);
            prev = pl;
        }
    }
}

TEST_CASE("path loss edge cases") {
    const double lambda = 0.01;
    RisSpec ris = square_ris(4, lambda / 2);
    ris.amplitude = 0.0;
    CHECK(std::isinf(ris_path_loss({10, 10, 1, 1}, ris, lambda)));
    ris.amplitude = 1.0;
    CHECK_THROWS_AS(element_path_loss({0, 10, 1, 1}, ris, lambda), DomainError);
    CHECK_THROWS_AS(element_path_loss({10, 10, 0, 1}, ris, lambda), DomainError);
}

TEST_CASE("link geometry") {
    const LinkGeometry g = link_geometry({0, 0, 10}, {0, 0, 50}, {30, 40, 0});
    CHECK(g.d1 == 40.0);
    CHECK_THAT(g.d2, WithinRel(std::sqrt(2500.0 + 2500.0), 1e-14));
    CHECK(g.cos1 == 1.0);
    CHECK_THAT(g.cos2, WithinRel(50.0 / std::sqrt(5000.0), 1e-14));
}

TEST_CASE("element centers are centered on the RIS position") {
    const RisSpec ris{.rows = 2, .cols = 3, .pitch = 0.1};
    const auto c = element_centers(ris, {1, 2, 50});
    REQUIRE(c.size() == 6);
    CHECK_THAT(c[0].x, WithinAbs(0.9, 1e-12));
    CHECK_THAT(c[0].y, WithinAbs(1.95, 1e-12));
    CHECK_THAT(c[2].x, WithinAbs(1.1, 1e-12));
    CHECK_THAT(c[3].y, WithinAbs(2.05, 1e-12));
    for (const auto &p : c) CHECK(p.z == 50.0);
}

TEST_CASE("aligned phases combine coherently") {
    const double lambda = wavelength(28e9);
    RisSpec ris{.rows = 5, .cols = 7, .pitch = lambda / 2, .amplitude = 0.8};
    const auto coeffs = element_coefficients({3, -4, 1.5}, {20, 10, 50}, ris, {0, 0, 10}, lambda);
    const auto phases = aligned_phases(coeffs);
    for (double p : phases) {
        CHECK(p >= 0.0);
        CHECK(p < 2 * std::numbers::pi);
    }
    CHECK_THAT(std::abs(reflect_sum(coeffs, phases)), WithinRel(0.8 * 35, 1e-12));
    const std::vector<double> wrong(3, 0.0);
    CHECK_THROWS(reflect_sum(coeffs, wrong));
}

TEST_CASE("cascade with aligned phases reproduces the closed-form path loss") {
    const double lambda = wavelength(28e9);
    const RisSpec ris = square_ris(16, lambda / 2);
    const Vec3 user{100, 100, 1.5}, bs{0, 0, 10}, pos{60, 40, 50};
    const auto phases = aligned_phases(element_coefficients(user, pos, ris, bs, lambda));
    const auto c = cascaded_channel(user, pos, ris, phases, bs, 8, lambda / 2, lambda);
    CHECK(c.h.size() == 8);
    CHECK_THAT(c.h.squaredNorm(), WithinRel(8.0 / c.path_loss, 1e-10));
    CHECK_THAT(c.path_loss, WithinRel(ris_path_loss(link_geometry(user, pos, bs), ris, lambda), 1e-12));
}

TEST_CASE("BS steering vector") {
    const double lambda = 0.01;
    const auto a0 = bs_steering(0.0, 4, lambda / 2, lambda);
    for (Eigen::Index m = 0; m < a0.size(); ++m) CHECK(std::abs(a0(m) - cplx(1, 0)) < 1e-15);
    const auto a = bs_steering(std::numbers::pi / 6, 2, lambda / 2, lambda);
    CHECK(std::abs(a(0) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(a(1) - cplx(0, -1)) < 1e-12);
}

TEST_CASE("arrival angle uses the x direction cosine") {
    CHECK(arrival_angle({0, 0, 10}, {0, 50, 50}) == 0.0);
    CHECK_THAT(arrival_angle({0, 0, 0}, {1, 0, 1}), WithinRel(std::numbers::pi / 4, 1e-12));
    CHECK_THAT(arrival_angle({0, 0, 0}, {-1, 0, 1}), WithinRel(-std::numbers::pi / 4, 1e-12));
}

TEST_CASE("eavesdropper at the BS with one antenna sees the cascade scalar") {
    const double lambda = wavelength(28e9);
    const RisSpec ris = square_ris(8, lambda / 2);
    const Vec3 user{100, -100, 1.5}, bs{0, 0, 10}, pos{30, -20, 50};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    std::vector<double> phases(64);
    for (auto &p : phases) p = u(rng);
    const auto c = cascaded_channel(user, pos, ris, phases, bs, 1, lambda / 2, lambda);
    const cplx e = eve_channel(user, pos, ris, phases, bs, lambda);
    CHECK(std::abs(e - c.h(0)) < 1e-12 * std::abs(e));
}

TEST_CASE("eavesdropper ten times farther loses at least 20 dB") {
    const double lambda = wavelength(28e9);
    const RisSpec ris = square_ris(8, lambda / 2);
    const Vec3 user{50, 0, 1.5}, pos{0, 0, 50};
    const Vec3 near{0, 20, 1.5};
    const double d_near = distance(pos, near);
    const double horizontal = std::sqrt(std::pow(10 * d_near, 2) - 48.5 * 48.5);
    const Vec3 far{0, horizontal, 1.5};
    // Best case for the eavesdropper: phases steered at it.
    auto gain = [&](const Vec3 &eve) {
        const auto ph = aligned_phases(element_coefficients(user, pos, ris, eve, lambda));
        return std::norm(eve_channel(user, pos, ris, ph, eve, lambda));
    };
    CHECK(gain(near) / gain(far) >= 100.0);
}

TEST_CASE("channel set has one column per user") {
    Scenario s = default_scenario();
    const double lambda = wavelength(s.carrier_frequency);
    std::vector<Vec3> pos;
    std::vector<std::vector<double>> phases;
    for (const auto &u : s.ris_units) {
        const Vec3 p{s.users[u.user].x / 2, s.users[u.user].y / 2, s.uav_altitude};
        pos.push_back(p);
        phases.push_back(aligned_phases(element_coefficients(s.users[u.user], p, u.ris, s.bs_position, lambda)));
    }
    const ChannelSet cs = build_channel_set(s, pos, phases);
    CHECK(cs.H.rows() == 8);
    CHECK(cs.H.cols() == 4);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK_THAT(cs.H.col(static_cast<Eigen::Index>(k)).squaredNorm(), WithinRel(8.0 / cs.path_loss[k], 1e-10));
}
