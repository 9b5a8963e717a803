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

#include "risuav/experiment.hpp"

#include "risuav/energy.hpp"
#include "risuav/errors.hpp"
#include "risuav/linkbudget.hpp"
#include "risuav/metrics.hpp"
#include "risuav/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

namespace risuav {

namespace {

double db(double linear) { return 10.0 * std::log10(linear); }

std::string point_label(std::initializer_list<std::pair<const char *, std::string>> items) {
    std::string s;
    for (const auto &[k, v] : items) s += (s.empty() ? "" : ", ") + std::string(k) + "=" + v;
    return s;
}

std::string num(double v) { return format_double(v); }

template <class Fn>
auto at_point(const std::string &label, Fn &&fn) {
    try {
        return fn();
    } catch (const ValidationError &e) {
        throw ValidationError("sweep point (" + label + "): " + e.what(), e.violations());
    } catch (const std::exception &e) {
        throw Error("sweep point (" + label + "): " + e.what());
    }
}

bool axis_used(ExperimentKind kind, std::string_view axis) {
    switch (kind) {
    case ExperimentKind::PathlossSweep: return axis == "elements" || axis == "frequency_ghz" || axis == "altitude_m";
    case ExperimentKind::FlighttimeSweep: return axis == "uav_models" || axis == "frequency_ghz" || axis == "area_m2";
    case ExperimentKind::Coverage:
    case ExperimentKind::Secrecy: return axis == "elements" || axis == "reference_snr_db" || axis == "altitude_m";
    }
    return true;
}

void add_common_metadata(ResultTable &t, const Config &cfg, const ExperimentSpec &spec) {
    t.metadata = {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"experiment", to_string(spec.kind)},
                  {"seed", std::to_string(spec.seed)},
                  {"config_hash", cfg.config_hash},
                  {"regulatory_profile", cfg.regulatory.country + " " + num(cfg.regulatory.max_altitude) + " m"}};
    constexpr std::string_view axes = "experiment.axes.";
    for (const auto &[k, v] : cfg.defaults_applied) {
        if (k.starts_with(axes) && !axis_used(spec.kind, std::string_view(k).substr(axes.size()))) continue;
        t.metadata.emplace_back("default " + k, v);
    }
}

RisSpec resized(const RisSpec &base, std::size_t elements, double pitch) {
    RisSpec r = base;
    std::tie(r.rows, r.cols) = element_grid_shape(elements);
    r.pitch = pitch;
    return r;
}

ResultTable pathloss_sweep(const Config &cfg, const ExperimentSpec &spec) {
    ResultTable t;
    t.columns = {{"elements", "-"},       {"frequency", "GHz"},       {"altitude", "m"},
                 {"pitch", "m"},          {"d_bs_ris", "m"},          {"d_ris_user", "m"},
                 {"path_loss", "dB"},     {"fraunhofer_distance", "m"}, {"far_field", "-"}};
    const Scenario &s = cfg.scenario;
    const Vec3 user = s.users.front();
    const RisSpec &base = s.ris_units.front().ris;
    for (std::size_t n : spec.axes.elements)
        for (double f : spec.axes.frequencies_hz)
            for (double h : spec.axes.altitudes_m) {
                const auto label = point_label({{"elements", std::to_string(n)}, {"frequency_ghz", num(f / 1e9)},
                                                {"altitude_m", num(h)}});
                t.rows.push_back(at_point(label, [&] {
                    const double lambda = wavelength(f);
                    const RisSpec ris = resized(base, n, cfg.ris_pitch_wavelengths * lambda);
                    const Vec3 pos{0.5 * (s.bs_position.x + user.x), 0.5 * (s.bs_position.y + user.y), h};
                    const LinkGeometry g = link_geometry(s.bs_position, pos, user);
                    const double pl = ris_path_loss(g, ris, lambda);
                    const double df = fraunhofer_distance(ris, lambda);
                    const bool far = std::min(g.d1, g.d2) >= df;
                    return std::vector<Cell>{static_cast<double>(n), f / 1e9, h, ris.pitch, g.d1, g.d2, db(pl), df,
                                             far ? 1.0 : 0.0};
                }));
            }
    return t;
}

ResultTable flighttime_sweep(const Config &cfg, const ExperimentSpec &spec) {
    ResultTable t;
    t.columns = {{"uav", "-"},         {"frequency", "GHz"},  {"area", "m^2"},        {"elements", "-"},
                 {"pitch", "m"},       {"ris_mass", "kg"},    {"ris_power", "W"},     {"hover_power", "W"},
                 {"flight_time", "min"}, {"within_payload", "-"}};
    RisSpec base = cfg.scenario.ris_units.front().ris;
    if (spec.calibration) {
        const auto &c = *spec.calibration;
        const double f = spec.axes.frequencies_hz.front();
        base.areal_density = at_point(point_label({{"calibration_uav", c.uav}, {"area_m2", num(c.area_m2)}}), [&] {
            return calibrate_areal_density(cfg.catalogs.uav(c.uav), base, c.area_m2,
                                           cfg.ris_pitch_wavelengths * wavelength(f), c.flight_time_s);
        });
        t.metadata.emplace_back("calibrated_areal_density_kg_per_m2", num(base.areal_density));
    }
    for (const auto &model : spec.axes.uav_models)
        for (double f : spec.axes.frequencies_hz)
            for (double area : spec.axes.areas_m2) {
                const auto label =
                    point_label({{"uav", model}, {"frequency_ghz", num(f / 1e9)}, {"area_m2", num(area)}});
                t.rows.push_back(at_point(label, [&] {
                    const UavSpec &uav = cfg.catalogs.uav(model);
                    const RisSpec ris = ris_for_area(base, area, cfg.ris_pitch_wavelengths * wavelength(f));
                    const std::size_t n = ris.element_count();
                    const double mass = ris_mass(ris);
                    const bool ok = mass <= uav.max_payload;
                    const double hover = hover_power(uav.empty_mass + mass, uav.rotor_disk_area, uav.figure_of_merit);
                    const double ft =
                        ok ? flight_time(uav, ris, n) / 60.0 : std::numeric_limits<double>::quiet_NaN();
                    return std::vector<Cell>{model, f / 1e9, area, static_cast<double>(n), ris.pitch, mass,
                                             ris_power(n, ris), hover, ft, ok ? 1.0 : 0.0};
                }));
            }
    return t;
}

ResultTable network_sweep(const Config &cfg, const ExperimentSpec &spec, const ProgressSink &progress) {
    const bool secrecy = spec.kind == ExperimentKind::Secrecy;
    ResultTable t;
    t.columns = {{"elements", "-"},       {"reference_snr", "dB"},      {"altitude", "m"},
                 {"noise_power", "W"},    {"spectral_efficiency", "bit/s/Hz"}, {"min_user_rate", "bit/s/Hz"}};
    if (secrecy) t.columns.push_back({"average_secrecy_rate", "bit/s/Hz"});
    t.columns.push_back({"objective", "bit/s/Hz"});
    t.columns.push_back({"ris_mass", "kg"});
    t.columns.push_back({"flight_time", "min"});
    const std::size_t units = cfg.scenario.ris_units.size();
    for (std::size_t k = 0; k < units; ++k) {
        t.columns.push_back({"uav" + std::to_string(k) + "_x", "m"});
        t.columns.push_back({"uav" + std::to_string(k) + "_y", "m"});
    }
    PsoParams pso = cfg.pso;
    pso.seed = spec.seed;
    for (std::size_t n : spec.axes.elements)
        for (double snr : spec.axes.reference_snr_db)
            for (double h : spec.axes.altitudes_m) {
                const auto label = point_label(
                    {{"elements", std::to_string(n)}, {"reference_snr_db", num(snr)}, {"altitude_m", num(h)}});
                if (progress) progress(std::string(to_string(spec.kind)) + ": " + label);
                t.rows.push_back(at_point(label, [&] {
                    const Scenario s = sweep_point_scenario(cfg, n, h, snr);
                    const SolveResult r = secrecy ? solve_secrecy(s, cfg.eve_grid, pso, cfg.cd)
                                                  : solve_coverage(s, pso, cfg.cd);
                    const auto &rates = r.metrics.per_user_rate;
                    std::vector<Cell> row{static_cast<double>(n), snr, h, s.noise_power, r.metrics.total_se,
                                          *std::min_element(rates.begin(), rates.end())};
                    if (secrecy) row.emplace_back(r.metrics.average_secrecy_rate);
                    row.emplace_back(r.objective_value);
                    const RisUnit &u = s.ris_units.front();
                    row.emplace_back(ris_mass(u.ris));
                    row.emplace_back(flight_time(u.uav, u.ris, u.ris.element_count()) / 60.0);
                    for (const auto &p : r.uav_positions) {
                        row.emplace_back(p.x);
                        row.emplace_back(p.y);
                    }
                    return row;
                }));
            }
    const auto &c = cfg.pso;
    t.metadata.emplace_back("pso", std::to_string(c.particles) + " particles x " + std::to_string(c.iterations) +
                                       " iterations, w=" + num(c.inertia) + ", c1=" + num(c.cognitive) +
                                       ", c2=" + num(c.social));
    t.metadata.emplace_back("cd", "max_sweeps=" + std::to_string(cfg.cd.max_sweeps) +
                                      ", tolerance=" + num(cfg.cd.tolerance) +
                                      ", quantization_bits=" + std::to_string(cfg.cd.quantization_bits));
    if (secrecy)
        t.metadata.emplace_back("eve_grid", std::to_string(cfg.eve_grid.points_per_axis) + "x" +
                                                std::to_string(cfg.eve_grid.points_per_axis) + " over " +
                                                num(cfg.eve_grid.extent) + " m");
    return t;
}

}  // namespace

Scenario sweep_point_scenario(const Config &cfg, std::size_t elements, double altitude, double reference_snr_db) {
    Scenario s = cfg.scenario;
    const double lambda = wavelength(s.carrier_frequency);
    for (auto &u : s.ris_units) u.ris = resized(u.ris, elements, cfg.ris_pitch_wavelengths * lambda);
    s.uav_altitude = altitude;
    s.reference_snr_db = reference_snr_db;
    auto violations = validate_scenario(s, cfg.regulatory);
    if (!violations.empty()) throw ValidationError("scenario is infeasible", std::move(violations));
    return with_calibrated_noise(std::move(s));
}

ResultTable run_experiment(const Config &cfg, const ExperimentSpec &spec, const ProgressSink &progress) {
    ResultTable t;
    switch (spec.kind) {
    case ExperimentKind::PathlossSweep: t = pathloss_sweep(cfg, spec); break;
    case ExperimentKind::FlighttimeSweep: t = flighttime_sweep(cfg, spec); break;
    case ExperimentKind::Coverage:
    case ExperimentKind::Secrecy: t = network_sweep(cfg, spec, progress); break;
    }
    auto extra = std::move(t.metadata);
    add_common_metadata(t, cfg, spec);
    t.metadata.insert(t.metadata.end(), extra.begin(), extra.end());
    return t;
}

}  // namespace risuav
