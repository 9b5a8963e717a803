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
#include "risuav/metrics.hpp"
#include "risuav/optim.hpp"

#include <cmath>

using namespace risuav;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Scenario small_scenario() {
    Scenario s = default_scenario();
    for (auto &u : s.ris_units) u.ris.rows = u.ris.cols = 8;
    return with_calibrated_noise(s);
}

PsoParams small_pso() {
    PsoParams p;
    p.particles = 10;
    p.iterations = 15;
    return p;
}

std::vector<std::vector<double>> phase_vectors(const SolveResult &r) {
    std::vector<std::vector<double>> out;
    for (const auto &p : r.phases) out.push_back(p.phases);
    return out;
}

}  // namespace

TEST_CASE("placement box and position decoding") {
    const Scenario s = small_scenario();
    const SearchBox box = placement_box(s);
    REQUIRE(box.lower.size() == 8);
    CHECK(box.lower[0] == s.region.x_min);
    CHECK(box.upper[1] == s.region.y_max);
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
    const auto pos = positions_from_vector(s, x);
    CHECK(pos[2].x == 5.0);
    CHECK(pos[2].y == 6.0);
    CHECK(pos[2].z == s.uav_altitude);
    CHECK_THROWS_AS(positions_from_vector(s, std::vector<double>{1, 2}), DomainError);
}

TEST_CASE("fast coverage objective equals the direct metric evaluation") {
    const Scenario s = small_scenario();
    const std::vector<Vec3> pos{{40, 60, 50}, {-70, 20, 50}, {-10, -90, 50}, {80, -30, 50}};
    const InnerSolution in = optimize_at(s, pos, ObjectiveKind::Coverage, nullptr, CdParams{}, 50);
    std::vector<std::vector<double>> ph;
    for (const auto &p : in.phases) ph.push_back(p.phases);
    const MetricReport m = evaluate_metrics(s, pos, ph, in.powers.p);
    CHECK_THAT(in.objective, WithinRel(m.total_se, 1e-9));
    for (double p : in.powers.p) CHECK(p == s.max_tx_power);
}

TEST_CASE("collinear placements score zero instead of failing") {
    const Scenario s = small_scenario();
    // Same x offset for two units gives identical BS steering vectors.
    const std::vector<Vec3> pos{{40, 60, 50}, {40, -60, 50}, {-10, -90, 50}, {80, -30, 50}};
    const InnerSolution in = optimize_at(s, pos, ObjectiveKind::Coverage, nullptr, CdParams{}, 50);
    CHECK(in.objective == 0.0);
}

TEST_CASE("fast secrecy objective equals the direct metric evaluation") {
    const Scenario s = small_scenario();
    const EveGrid grid{.center = {0, 0, 1.5}, .extent = 100, .points_per_axis = 5, .z = 1.5};
    const std::vector<Vec3> pos{{40, 60, 50}, {-70, 20, 50}, {-10, -90, 50}, {80, -30, 50}};
    for (std::size_t sweeps : {0, 5}) {
        const InnerSolution in = optimize_at(s, pos, ObjectiveKind::Secrecy, &grid, CdParams{}, sweeps);
        std::vector<std::vector<double>> ph;
        for (const auto &p : in.phases) ph.push_back(p.phases);
        CHECK_THAT(in.objective, WithinRel(average_secrecy_rate(s, pos, ph, in.powers.p, grid), 1e-9));
        CHECK(feasible(in.powers));
    }
}

TEST_CASE("coverage solve: trace, metrics and determinism") {
    const Scenario s = small_scenario();
    const SolveResult a = solve_coverage(s, small_pso(), CdParams{});
    CHECK(a.trace.size() == small_pso().iterations + 1);
    for (std::size_t i = 1; i < a.trace.size(); ++i) CHECK(a.trace[i] >= a.trace[i - 1]);
    CHECK_THAT(a.metrics.total_se, WithinRel(a.objective_value, 1e-9));
    for (const auto &p : a.uav_positions) CHECK(s.region.contains(p));
    const SolveResult b = solve_coverage(s, small_pso(), CdParams{});
    CHECK(a.uav_positions == b.uav_positions);
    CHECK(a.trace == b.trace);
}

TEST_CASE("secrecy solve: trace and metrics agree") {
    const Scenario s = small_scenario();
    const EveGrid grid{.center = {0, 0, 1.5}, .extent = 100, .points_per_axis = 5, .z = 1.5};
    CdParams cd;
    cd.max_sweeps = 5;
    const SolveResult r = solve_secrecy(s, grid, small_pso(), cd);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] >= r.trace[i - 1]);
    CHECK_THAT(r.metrics.average_secrecy_rate, WithinRel(r.objective_value, 1e-9));
    CHECK(r.metrics.average_secrecy_rate <= r.metrics.total_se + 1e-12);
}

TEST_CASE("secrecy with an unreachable eavesdropper reduces to coverage") {
    const Scenario s = small_scenario();
    const EveGrid far{.center = {1e7, 1e7, 1.5}, .extent = 1.0, .points_per_axis = 2, .z = 1.5};
    const SolveResult sec = solve_secrecy(s, far, small_pso(), CdParams{.max_sweeps = 3});
    const SolveResult cov = solve_coverage(s, small_pso(), CdParams{});
    CHECK_THAT(sec.objective_value, WithinRel(cov.objective_value, 1e-4));
}

TEST_CASE("single-user placement matches a 1 m grid search") {
    Scenario s = default_scenario();
    s.users = {{60, 40, 1.5}};
    s.ris_units.resize(1);
    s.ris_units[0].user = 0;
    s.region = {-20, 80, -20, 60};
    s = with_calibrated_noise(s);
    const CdParams cd;
    auto f = [&](double x, double y) {
        const std::vector<Vec3> pos{{x, y, s.uav_altitude}};
        return optimize_at(s, pos, ObjectiveKind::Coverage, nullptr, cd, cd.max_sweeps).objective;
    };
    double best = -1.0;
    int bx = 0, by = 0;
    for (int x = -20; x <= 80; ++x)
        for (int y = -20; y <= 60; ++y) {
            const double v = f(x, y);
            if (v > best) {
                best = v;
                bx = x;
                by = y;
            }
        }
    double cell = 0.0;
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) cell = std::max(cell, std::abs(f(bx + dx, by + dy) - best));
    const SolveResult r = solve_coverage(s, PsoParams{}, cd);
    CHECK(r.objective_value >= best - cell);
}
