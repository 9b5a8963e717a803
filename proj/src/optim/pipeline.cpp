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

#include "risuav/errors.hpp"
#include "risuav/optim.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace risuav {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Per-unit geometry that does not depend on the phases.
struct UnitLink {
    std::vector<Vec3> centers;
    std::vector<double> user_dist;  // |user - e_n|
    std::vector<cplx> legit;        // element coefficients towards the BS
    double element_pl = 0.0;        // towards the BS
};

UnitLink make_unit_link(const Scenario &s, const RisUnit &unit, const Vec3 &pos, double lambda) {
    UnitLink l;
    const Vec3 &user = s.users.at(unit.user);
    l.centers = element_centers(unit.ris, pos);
    l.user_dist.reserve(l.centers.size());
    for (const auto &e : l.centers) l.user_dist.push_back(distance(user, e));
    l.legit = element_coefficients(user, pos, unit.ris, s.bs_position, lambda);
    l.element_pl = element_path_loss(link_geometry(user, pos, s.bs_position), unit.ris, lambda);
    return l;
}

// Coefficients A exp(-j 2 pi (|u - e_n| + |e_n - eve|) / lambda) for one eavesdropper point.
void eve_coefficients(const UnitLink &l, double amplitude, const Vec3 &eve, double lambda, std::vector<cplx> &out) {
    out.resize(l.centers.size());
    for (std::size_t n = 0; n < l.centers.size(); ++n) {
        const double cycles = (l.user_dist[n] + distance(l.centers[n], eve)) / lambda;
        out[n] = std::polar(amplitude, -kTwoPi * (cycles - std::floor(cycles)));
    }
}

// exp(-j 2 pi t) for t >= 0: a 1024-entry table of whole steps times a short
// series for the remainder (|x| < pi / 512), accurate to rounding.
constexpr int kPhasorSteps = 1024;

const std::vector<cplx> &phasor_table() {
    static const std::vector<cplx> table = [] {
        std::vector<cplx> t(kPhasorSteps);
        for (int i = 0; i < kPhasorSteps; ++i) t[i] = std::polar(1.0, -kTwoPi * i / kPhasorSteps);
        return t;
    }();
    return table;
}

inline cplx unit_phasor(double t, const cplx *table) {
    t -= static_cast<double>(static_cast<std::int64_t>(t));
    const double scaled = t * kPhasorSteps;
    const auto i = static_cast<int>(scaled);
    const double x = kTwoPi * (scaled - i) / kPhasorSteps;
    const double x2 = x * x;
    const double c = 1.0 + x2 * (-0.5 + x2 * (1.0 / 24 - x2 / 720));
    const double s = x * (1.0 + x2 * (-1.0 / 6 + x2 * (1.0 / 120 - x2 / 5040)));
    const cplx base = table[i & (kPhasorSteps - 1)];
    return {base.real() * c + base.imag() * s, base.imag() * c - base.real() * s};
}

// Per-element weights A exp(j phi_n) exp(-j 2 pi |u - e_n| / lambda); the eavesdropper
// sum is then sum_n w_n exp(-j 2 pi |e_n - eve| / lambda).
std::vector<cplx> eve_weights(const UnitLink &l, double amplitude, std::span<const double> phases, double lambda) {
    std::vector<cplx> w(l.centers.size());
    for (std::size_t n = 0; n < w.size(); ++n)
        w[n] = amplitude * std::polar(1.0, phases[n]) * unit_phasor(l.user_dist[n] / lambda, phasor_table().data());
    return w;
}

cplx eve_sum(const UnitLink &l, std::span<const cplx> w, const Vec3 &eve, double lambda) {
    const double inv = 1.0 / lambda;
    const cplx *table = phasor_table().data();
    double re = 0.0, im = 0.0;
    for (std::size_t n = 0; n < w.size(); ++n) {
        const Vec3 &e = l.centers[n];
        const double dx = e.x - eve.x, dy = e.y - eve.y, dz = e.z - eve.z;
        const cplx p = unit_phasor(std::sqrt(dx * dx + dy * dy + dz * dz) * inv, table);
        re += w[n].real() * p.real() - w[n].imag() * p.imag();
        im += w[n].real() * p.imag() + w[n].imag() * p.real();
    }
    return {re, im};
}

// Secrecy objective over powers: sum_k mean_e max(0, log2(1 + p_k a_k) - log2(1 + p_k q_ke)).
// The objective separates over users, so per-user terms are cached.
class SecrecyPowerObjective {
public:
    SecrecyPowerObjective(std::vector<double> legit, std::vector<std::vector<double>> eve)
        : a_(std::move(legit)), q_(std::move(eve)), last_p_(a_.size(), std::numeric_limits<double>::quiet_NaN()),
          last_term_(a_.size(), 0.0) {}

    double operator()(std::span<const double> p) const {
        double total = 0.0;
        for (std::size_t k = 0; k < a_.size(); ++k) {
            if (!(p[k] == last_p_[k])) {
                last_p_[k] = p[k];
                last_term_[k] = term(k, p[k]);
            }
            total += last_term_[k];
        }
        return total;
    }

private:
    double term(std::size_t k, double p) const {
        const double rb = std::log2(1.0 + p * a_[k]);
        double sum = 0.0;
        for (double q : q_[k]) sum += std::max(0.0, rb - std::log2(1.0 + p * q));
        return sum / static_cast<double>(q_[k].size());
    }

    std::vector<double> a_;
    std::vector<std::vector<double>> q_;
    mutable std::vector<double> last_p_;
    mutable std::vector<double> last_term_;
};

PowerAlloc initial_alloc(const Scenario &s) {
    PowerAlloc a;
    a.mode = s.power_budget_mode;
    a.budget = s.max_tx_power;
    const auto k = static_cast<double>(s.users.size());
    a.p.assign(s.users.size(), s.power_budget_mode == PowerBudgetMode::PerUserCap ? s.max_tx_power : s.max_tx_power / k);
    return a;
}

}  // namespace

SearchBox placement_box(const Scenario &s) {
    if (s.region.degenerate()) throw DomainError("placement_box: degenerate region");
    SearchBox box;
    for (std::size_t u = 0; u < s.ris_units.size(); ++u) {
        box.lower.push_back(s.region.x_min);
        box.upper.push_back(s.region.x_max);
        box.lower.push_back(s.region.y_min);
        box.upper.push_back(s.region.y_max);
    }
    return box;
}

std::vector<Vec3> positions_from_vector(const Scenario &s, std::span<const double> x) {
    if (x.size() != 2 * s.ris_units.size()) throw DomainError("positions_from_vector: wrong dimension");
    std::vector<Vec3> out;
    out.reserve(s.ris_units.size());
    for (std::size_t u = 0; u < s.ris_units.size(); ++u) out.push_back({x[2 * u], x[2 * u + 1], s.uav_altitude});
    return out;
}

InnerSolution optimize_at(const Scenario &s, std::span<const Vec3> positions, ObjectiveKind kind, const EveGrid *grid,
                          const CdParams &cd, std::size_t cd_sweeps) {
    const std::size_t n_units = s.ris_units.size();
    const std::size_t n_users = s.users.size();
    if (positions.size() != n_units) throw DomainError("optimize_at: one position per RIS unit required");
    if (kind == ObjectiveKind::Secrecy && grid == nullptr) throw DomainError("optimize_at: secrecy needs an eve grid");
    if (!(s.noise_power > 0.0)) throw DomainError("optimize_at: noise power must be > 0");
    const double lambda = wavelength(s.carrier_frequency);
    const double sigma2 = s.noise_power;

    InnerSolution sol;
    sol.powers = initial_alloc(s);
    sol.phases.resize(n_units);

    std::vector<UnitLink> links;
    links.reserve(n_units);
    std::vector<cplx> scalar(n_units);
    for (std::size_t u = 0; u < n_units; ++u) {
        links.push_back(make_unit_link(s, s.ris_units[u], positions[u], lambda));
        PhaseConfig init{aligned_quantized_phases(links[u].legit, cd.quantization_bits), cd.quantization_bits};
        if (kind == ObjectiveKind::Coverage) {
            // The post-ZF rate of user k grows with |S_k| only, so each RIS maximizes its own coherent sum.
            CoherentSumObjective obj(links[u].legit);
            sol.phases[u] = cd_phases(obj, std::move(init), cd_sweeps, cd.tolerance, cd.search_levels);
        } else {
            sol.phases[u] = std::move(init);
        }
        scalar[u] = reflect_sum(links[u].legit, sol.phases[u].phases);
    }

    Eigen::MatrixXcd steering(static_cast<Eigen::Index>(s.bs_antennas), static_cast<Eigen::Index>(n_users));
    for (std::size_t u = 0; u < n_units; ++u)
        steering.col(static_cast<Eigen::Index>(s.ris_units[u].user)) =
            bs_steering(arrival_angle(s.bs_position, positions[u]), s.bs_antennas, s.bs_antenna_spacing, lambda);
    std::vector<double> enhancement;
    try {
        enhancement = zf_noise_enhancement(steering);
    } catch (const RankDeficientError &) {
        sol.objective = 0.0;
        return sol;
    }

    // Post-ZF gain per unit power: SINR_k = p_k g_k / sigma^2.
    std::vector<double> gains(n_users, 0.0);
    auto refresh_gains = [&] {
        for (std::size_t u = 0; u < n_units; ++u) {
            const std::size_t k = s.ris_units[u].user;
            gains[k] = std::norm(scalar[u]) / (links[u].element_pl * enhancement[k]);
        }
    };
    refresh_gains();

    if (kind == ObjectiveKind::Coverage) {
        sol.powers = cd_power(gains, sol.powers, sigma2, kind, {}, cd);
        std::vector<double> sinr(n_users);
        for (std::size_t k = 0; k < n_users; ++k) sinr[k] = sol.powers.p[k] * gains[k] / sigma2;
        sol.objective = spectral_efficiency(sinr);
        return sol;
    }

    const auto points = grid_points(*grid);
    std::vector<std::vector<double>> eve_scale(n_users, std::vector<double>(points.size()));  // 1 / (sigma^2 PL_e)
    for (std::size_t u = 0; u < n_units; ++u) {
        const RisUnit &unit = s.ris_units[u];
        const std::size_t k = unit.user;
        for (std::size_t e = 0; e < points.size(); ++e)
            eve_scale[k][e] = 1.0 / (sigma2 * element_path_loss(link_geometry(s.users[k], positions[u], points[e]),
                                                                unit.ris, lambda));
    }

    auto power_step = [&] {
        std::vector<double> legit(n_users);
        std::vector<std::vector<double>> eve(n_users, std::vector<double>(points.size()));
        for (std::size_t u = 0; u < n_units; ++u) {
            const std::size_t k = s.ris_units[u].user;
            legit[k] = gains[k] / sigma2;
            const auto w = eve_weights(links[u], s.ris_units[u].ris.amplitude, sol.phases[u].phases, lambda);
            for (std::size_t e = 0; e < points.size(); ++e)
                eve[k][e] = eve_scale[k][e] * std::norm(eve_sum(links[u], w, points[e], lambda));
        }
        SecrecyPowerObjective objective(std::move(legit), std::move(eve));
        sol.powers = cd_power(gains, sol.powers, sigma2, kind, std::cref(objective), cd);
        sol.objective = objective(sol.powers.p);
    };

    power_step();
    if (cd_sweeps == 0) return sol;

    std::vector<std::vector<cplx>> eve_coeffs(points.size());
    for (std::size_t u = 0; u < n_units; ++u) {
        const RisUnit &unit = s.ris_units[u];
        const std::size_t k = unit.user;
        for (std::size_t e = 0; e < points.size(); ++e)
            eve_coefficients(links[u], unit.ris.amplitude, points[e], lambda, eve_coeffs[e]);
        const double p = sol.powers.p[k];
        std::vector<double> b(points.size());
        for (std::size_t e = 0; e < points.size(); ++e) b[e] = p * eve_scale[k][e];
        SecrecyPhaseObjective obj(links[u].legit, p / (sigma2 * links[u].element_pl * enhancement[k]), eve_coeffs,
                                  std::move(b));
        sol.phases[u] = cd_phases(obj, sol.phases[u], cd_sweeps, cd.tolerance, cd.search_levels);
        scalar[u] = reflect_sum(links[u].legit, sol.phases[u].phases);
    }
    refresh_gains();
    power_step();
    return sol;
}

namespace {

std::vector<Vec3> best_positions(const Scenario &s, const PsoResult &r) { return positions_from_vector(s, r.best_position); }

std::vector<std::vector<double>> phase_vectors(const std::vector<PhaseConfig> &phases) {
    std::vector<std::vector<double>> out;
    out.reserve(phases.size());
    for (const auto &p : phases) out.push_back(p.phases);
    return out;
}

}  // namespace

SolveResult solve_coverage(const Scenario &s, const PsoParams &pso_params, const CdParams &cd) {
    auto fitness = [&](std::span<const double> x) {
        const auto pos = positions_from_vector(s, x);
        return optimize_at(s, pos, ObjectiveKind::Coverage, nullptr, cd, cd.max_sweeps).objective;
    };
    const PsoResult swarm = pso(fitness, placement_box(s), pso_params);

    SolveResult res;
    res.objective_kind = ObjectiveKind::Coverage;
    res.uav_positions = best_positions(s, swarm);
    InnerSolution inner = optimize_at(s, res.uav_positions, ObjectiveKind::Coverage, nullptr, cd, cd.max_sweeps);
    res.phases = std::move(inner.phases);
    res.powers = std::move(inner.powers);
    res.trace = swarm.trace;
    res.objective_value = res.trace.back();
    res.metrics = evaluate_metrics(s, res.uav_positions, phase_vectors(res.phases), res.powers.p);
    return res;
}

SolveResult solve_secrecy(const Scenario &s, const EveGrid &grid, const PsoParams &pso_params, const CdParams &cd) {
    auto fitness = [&](std::span<const double> x) {
        const auto pos = positions_from_vector(s, x);
        return optimize_at(s, pos, ObjectiveKind::Secrecy, &grid, cd, cd.secrecy_inner_sweeps).objective;
    };
    const PsoResult swarm = pso(fitness, placement_box(s), pso_params);

    SolveResult res;
    res.objective_kind = ObjectiveKind::Secrecy;
    res.uav_positions = best_positions(s, swarm);
    res.trace = swarm.trace;
    InnerSolution inner =
        optimize_at(s, res.uav_positions, ObjectiveKind::Secrecy, &grid, cd, cd.secrecy_inner_sweeps);
    if (cd.max_sweeps > cd.secrecy_inner_sweeps) {
        InnerSolution polished = optimize_at(s, res.uav_positions, ObjectiveKind::Secrecy, &grid, cd, cd.max_sweeps);
        if (polished.objective >= res.trace.back()) {
            inner = std::move(polished);
            res.trace.push_back(inner.objective);
        }
    }
    res.phases = std::move(inner.phases);
    res.powers = std::move(inner.powers);
    res.objective_value = res.trace.back();
    res.metrics = evaluate_metrics(s, res.uav_positions, phase_vectors(res.phases), res.powers.p, &grid);
    return res;
}

}  // namespace risuav
