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

#include "risuav/config.hpp"

#include "risuav/errors.hpp"
#include "risuav/linkbudget.hpp"
#include "risuav/results.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace risuav {

const char *to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::PathlossSweep: return "pathloss_sweep";
    case ExperimentKind::FlighttimeSweep: return "flighttime_sweep";
    case ExperimentKind::Coverage: return "coverage";
    case ExperimentKind::Secrecy: return "secrecy";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (auto k : {ExperimentKind::PathlossSweep, ExperimentKind::FlighttimeSweep, ExperimentKind::Coverage,
                   ExperimentKind::Secrecy})
        if (name == to_string(k)) return k;
    throw ConfigError("unknown experiment kind '" + std::string(name) + "'", "experiment.kind");
}

const UavSpec &Catalogs::uav(std::string_view name) const {
    for (const auto &u : uavs)
        if (u.name == name) return u;
    throw ConfigError("unknown UAV profile '" + std::string(name) + "'", "uav_profiles");
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

namespace {

std::vector<UavSpec> builtin_uavs() {
    // Illustrative airframes tuned to published endurance figures, not vendor data.
    return {default_uav(),
            UavSpec{"noa_6", 4.5, 40.0 * 60.0, 6.0 * std::numbers::pi * 0.19 * 0.19, 0.65, 2.0},
            UavSpec{"if1200", 8.0, 43.0 * 60.0, 6.0 * std::numbers::pi * 0.229 * 0.229, 0.7, 3.9}};
}

std::vector<RegulatoryProfile> builtin_regulatory() { return {{"EU", 120.0}, {"US", 121.92}, {"JP", 150.0}}; }

std::string show(double v) { return format_double(v); }
std::string show(const std::string &v) { return v; }
std::string show(std::size_t v) { return std::to_string(v); }
std::string show(unsigned v) { return std::to_string(v); }
template <class T>
std::string show(const std::vector<T> &v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + show(v[i]);
    return s + "]";
}

bool is_map(const YAML::Node &n) { return n.IsDefined() && n.IsMap(); }

int line_of(const YAML::Node &n) { return n.IsDefined() ? n.Mark().line + 1 : 0; }

std::string join(const std::string &path, const std::string &key) { return path.empty() ? key : path + "." + key; }

class Reader {
public:
    explicit Reader(std::vector<std::pair<std::string, std::string>> &defaults) : defaults_(defaults) {}

    void allow(const YAML::Node &map, std::initializer_list<const char *> keys, const std::string &path) const {
        if (!map.IsDefined() || map.IsNull()) return;
        if (!map.IsMap()) throw ConfigError(path + ": expected a mapping", path, line_of(map));
        const std::set<std::string> ok(keys.begin(), keys.end());
        for (const auto &kv : map) {
            const auto key = kv.first.as<std::string>();
            if (!ok.count(key))
                throw ConfigError("unknown key '" + join(path, key) + "'", join(path, key), line_of(kv.first));
        }
    }

    template <class T>
    T required(const YAML::Node &map, const std::string &key, const std::string &path) const {
        const std::string full = join(path, key);
        const YAML::Node n = is_map(map) ? map[key] : YAML::Node();
        if (!n.IsDefined() || n.IsNull())
            throw ConfigError("missing required key '" + full + "'", full, line_of(map));
        return convert<T>(n, full);
    }

    template <class T>
    T optional(const YAML::Node &map, const std::string &key, const std::string &path, const T &fallback) const {
        const std::string full = join(path, key);
        const YAML::Node n = is_map(map) ? map[key] : YAML::Node();
        if (!n.IsDefined() || n.IsNull()) {
            defaults_.emplace_back(full, show(fallback));
            return fallback;
        }
        return convert<T>(n, full);
    }

    template <class T>
    std::optional<T> maybe(const YAML::Node &map, const std::string &key, const std::string &path) const {
        const YAML::Node n = is_map(map) ? map[key] : YAML::Node();
        if (!n.IsDefined() || n.IsNull()) return std::nullopt;
        return convert<T>(n, join(path, key));
    }

    template <class T>
    static T convert(const YAML::Node &n, const std::string &full) {
        try {
            return n.as<T>();
        } catch (const YAML::Exception &e) {
            throw ConfigError(full + ": invalid value (" + e.msg + ")", full, e.mark.line + 1);
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> &defaults_;
};

Vec3 to_vec3(const std::vector<double> &v, const std::string &key, int line) {
    if (v.size() != 3) throw ConfigError(key + ": expected [x, y, z]", key, line);
    return {v[0], v[1], v[2]};
}

double positive(double v, const std::string &key, int line) {
    if (!(v > 0.0)) throw ConfigError(key + ": must be > 0", key, line);
    return v;
}

UavSpec parse_uav(const Reader &r, const YAML::Node &n, const std::string &path) {
    r.allow(n, {"name", "empty_mass_kg", "base_flight_time_min", "rotor_disk_area_m2", "figure_of_merit",
                "max_payload_kg"},
            path);
    UavSpec u;
    u.name = r.required<std::string>(n, "name", path);
    u.empty_mass = r.required<double>(n, "empty_mass_kg", path);
    u.base_flight_time = 60.0 * r.required<double>(n, "base_flight_time_min", path);
    u.rotor_disk_area = r.required<double>(n, "rotor_disk_area_m2", path);
    u.figure_of_merit = r.required<double>(n, "figure_of_merit", path);
    u.max_payload = r.required<double>(n, "max_payload_kg", path);
    return u;
}

void parse_scenario(const Reader &r, const YAML::Node &root, Config &cfg) {
    const YAML::Node n = root["scenario"];
    if (!n.IsDefined()) throw ConfigError("missing required section 'scenario'", "scenario", 1);
    r.allow(n, {"carrier_frequency_ghz", "uav_altitude_m", "max_tx_power_w", "power_budget_mode", "reference_snr_db",
                "noise_power_w", "bs", "users", "region_m", "ris", "uav_model"},
            "scenario");
    Scenario &s = cfg.scenario;
    s.carrier_frequency =
        1e9 * positive(r.required<double>(n, "carrier_frequency_ghz", "scenario"), "scenario.carrier_frequency_ghz",
                       line_of(n["carrier_frequency_ghz"]));
    const double lambda = wavelength(s.carrier_frequency);
    s.uav_altitude = r.optional<double>(n, "uav_altitude_m", "scenario", 50.0);
    s.max_tx_power = r.optional<double>(n, "max_tx_power_w", "scenario", 0.2);
    const auto mode = r.optional<std::string>(n, "power_budget_mode", "scenario", "per_user_cap");
    if (mode == "per_user_cap")
        s.power_budget_mode = PowerBudgetMode::PerUserCap;
    else if (mode == "sum_budget")
        s.power_budget_mode = PowerBudgetMode::SumBudget;
    else
        throw ConfigError("scenario.power_budget_mode: expected per_user_cap or sum_budget",
                          "scenario.power_budget_mode", line_of(n["power_budget_mode"]));
    s.noise_power = r.maybe<double>(n, "noise_power_w", "scenario").value_or(0.0);
    s.reference_snr_db = r.maybe<double>(n, "reference_snr_db", "scenario");
    if (!s.reference_snr_db && !(s.noise_power > 0.0)) {
        s.reference_snr_db = 0.0;
        cfg.defaults_applied.emplace_back("scenario.reference_snr_db", "0");
    }

    const YAML::Node bs = n["bs"];
    r.allow(bs, {"position_m", "antennas", "antenna_spacing_wavelengths", "antenna_spacing_m"}, "scenario.bs");
    s.bs_position = to_vec3(r.optional<std::vector<double>>(bs, "position_m", "scenario.bs", {0.0, 0.0, 10.0}),
                            "scenario.bs.position_m", line_of(bs));
    s.bs_antennas = r.optional<std::size_t>(bs, "antennas", "scenario.bs", 8);
    if (auto m = r.maybe<double>(bs, "antenna_spacing_m", "scenario.bs"))
        s.bs_antenna_spacing = *m;
    else
        s.bs_antenna_spacing = lambda * r.optional<double>(bs, "antenna_spacing_wavelengths", "scenario.bs", 0.5);

    const YAML::Node users = n["users"];
    r.allow(users, {"square_side_m", "height_m", "positions_m"}, "scenario.users");
    if (is_map(users) && users["positions_m"].IsDefined()) {
        const auto pts = r.required<std::vector<std::vector<double>>>(users, "positions_m", "scenario.users");
        for (const auto &p : pts) s.users.push_back(to_vec3(p, "scenario.users.positions_m", line_of(users)));
    } else {
        const double side = r.optional<double>(users, "square_side_m", "scenario.users", 200.0);
        const double z = r.optional<double>(users, "height_m", "scenario.users", 1.5);
        s.users = square_corners(s.bs_position, side, z);
    }

    const auto region = r.optional<std::vector<double>>(n, "region_m", "scenario", {-150.0, 150.0, -150.0, 150.0});
    if (region.size() != 4)
        throw ConfigError("scenario.region_m: expected [x_min, x_max, y_min, y_max]", "scenario.region_m",
                          line_of(n["region_m"]));
    s.region = {region[0], region[1], region[2], region[3]};

    const YAML::Node rn = n["ris"];
    r.allow(rn, {"rows", "cols", "pitch_wavelengths", "pitch_m", "amplitude", "element_gain", "per_element_power_w",
                 "controller_power_w", "areal_density_kg_per_m2"},
            "scenario.ris");
    RisSpec ris;
    ris.rows = r.optional<std::size_t>(rn, "rows", "scenario.ris", 16);
    ris.cols = r.optional<std::size_t>(rn, "cols", "scenario.ris", 16);
    if (auto p = r.maybe<double>(rn, "pitch_m", "scenario.ris")) {
        ris.pitch = *p;
        cfg.ris_pitch_wavelengths = *p / lambda;
    } else {
        cfg.ris_pitch_wavelengths = r.optional<double>(rn, "pitch_wavelengths", "scenario.ris", 0.5);
        ris.pitch = cfg.ris_pitch_wavelengths * lambda;
    }
    ris.amplitude = r.optional<double>(rn, "amplitude", "scenario.ris", 1.0);
    ris.element_gain = r.optional<double>(rn, "element_gain", "scenario.ris", std::numbers::pi);
    ris.per_element_power = r.optional<double>(rn, "per_element_power_w", "scenario.ris", 5e-3);
    ris.controller_power = r.optional<double>(rn, "controller_power_w", "scenario.ris", 0.5);
    ris.areal_density = r.optional<double>(rn, "areal_density_kg_per_m2", "scenario.ris", 3.0);

    const auto model = r.optional<std::string>(n, "uav_model", "scenario", "zeo_x4");
    const UavSpec uav = cfg.catalogs.uav(model);
    s.ris_units.clear();
    for (std::size_t k = 0; k < s.users.size(); ++k) s.ris_units.push_back({ris, uav, k});
}

void parse_experiment(const Reader &r, const YAML::Node &root, Config &cfg) {
    const YAML::Node n = root["experiment"];
    if (!n.IsDefined() || n.IsNull()) return;
    r.allow(n, {"kind", "seed", "output", "axes", "areal_density_calibration"}, "experiment");
    ExperimentSpec e;
    e.kind = parse_experiment_kind(r.required<std::string>(n, "kind", "experiment"));
    e.seed = r.optional<std::uint64_t>(n, "seed", "experiment", 42);
    e.output = r.optional<std::string>(n, "output", "experiment", std::string("results.csv"));

    const YAML::Node ax = n["axes"];
    r.allow(ax, {"elements", "frequency_ghz", "altitude_m", "reference_snr_db", "area_m2", "uav_models"},
            "experiment.axes");
    const std::string p = "experiment.axes";
    auto req_axis = [&](const char *key) {
        if (!is_map(ax) || !ax[key].IsDefined())
            throw ConfigError(std::string("experiment kind '") + to_string(e.kind) + "' requires axis '" + p + "." +
                                  key + "'",
                              p + "." + key, line_of(n));
    };
    const Scenario &s = cfg.scenario;
    switch (e.kind) {
    case ExperimentKind::PathlossSweep:
        req_axis("elements");
        req_axis("frequency_ghz");
        break;
    case ExperimentKind::FlighttimeSweep: req_axis("area_m2"); break;
    case ExperimentKind::Coverage:
    case ExperimentKind::Secrecy: req_axis("elements"); break;
    }
    e.axes.elements = r.optional<std::vector<std::size_t>>(ax, "elements", p, {s.ris_units.front().ris.element_count()});
    for (double f : r.optional<std::vector<double>>(ax, "frequency_ghz", p, {s.carrier_frequency / 1e9}))
        e.axes.frequencies_hz.push_back(1e9 * f);
    e.axes.altitudes_m = r.optional<std::vector<double>>(ax, "altitude_m", p, {s.uav_altitude});
    e.axes.reference_snr_db =
        r.optional<std::vector<double>>(ax, "reference_snr_db", p, {s.reference_snr_db.value_or(0.0)});
    e.axes.areas_m2 = r.optional<std::vector<double>>(ax, "area_m2", p, {0.0});
    e.axes.uav_models = r.optional<std::vector<std::string>>(ax, "uav_models", p, {s.ris_units.front().uav.name});
    auto nonempty = [&](bool empty, const char *key) {
        if (empty) throw ConfigError(p + "." + key + ": axis must not be empty", p + "." + key, line_of(ax));
    };
    nonempty(e.axes.elements.empty(), "elements");
    nonempty(e.axes.frequencies_hz.empty(), "frequency_ghz");
    nonempty(e.axes.altitudes_m.empty(), "altitude_m");
    nonempty(e.axes.reference_snr_db.empty(), "reference_snr_db");
    nonempty(e.axes.areas_m2.empty(), "area_m2");
    nonempty(e.axes.uav_models.empty(), "uav_models");
    for (const auto &m : e.axes.uav_models) (void)cfg.catalogs.uav(m);

    const YAML::Node cal = n["areal_density_calibration"];
    if (cal.IsDefined() && !cal.IsNull()) {
        const std::string cp = "experiment.areal_density_calibration";
        r.allow(cal, {"uav", "area_m2", "flight_time_min"}, cp);
        DensityCalibration c;
        c.uav = r.required<std::string>(cal, "uav", cp);
        (void)cfg.catalogs.uav(c.uav);
        c.area_m2 = r.required<double>(cal, "area_m2", cp);
        c.flight_time_s = 60.0 * r.required<double>(cal, "flight_time_min", cp);
        e.calibration = c;
    }
    cfg.experiment = std::move(e);
}

}  // namespace

Config parse_config(std::string_view text) {
    Config cfg;
    cfg.config_hash = fnv1a_hex(text);
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException &e) {
        throw ConfigError("YAML syntax error at line " + std::to_string(e.mark.line + 1) + ": " + e.msg, "",
                          e.mark.line + 1);
    }
    if (!is_map(root)) throw ConfigError("configuration must be a YAML mapping", "", 1);
    const Reader r(cfg.defaults_applied);
    r.allow(root, {"scenario", "regulatory", "uav_profiles", "eve_grid", "optimizer", "experiment"}, "");

    // Catalogs first: the scenario refers to them by name.
    const YAML::Node profiles = root["uav_profiles"];
    if (profiles.IsDefined() && !profiles.IsNull()) {
        if (!profiles.IsSequence())
            throw ConfigError("uav_profiles: expected a list", "uav_profiles", line_of(profiles));
        for (std::size_t i = 0; i < profiles.size(); ++i)
            cfg.catalogs.uavs.push_back(parse_uav(r, profiles[i], "uav_profiles[" + std::to_string(i) + "]"));
    } else {
        cfg.catalogs.uavs = builtin_uavs();
        cfg.defaults_applied.emplace_back("uav_profiles", "builtin (zeo_x4, noa_6, if1200)");
    }

    const YAML::Node reg = root["regulatory"];
    r.allow(reg, {"active", "profiles"}, "regulatory");
    if (is_map(reg) && reg["profiles"].IsDefined()) {
        for (std::size_t i = 0; i < reg["profiles"].size(); ++i) {
            const YAML::Node p = reg["profiles"][i];
            const std::string path = "regulatory.profiles[" + std::to_string(i) + "]";
            r.allow(p, {"country", "max_altitude_m"}, path);
            cfg.catalogs.regulatory.push_back(
                {r.required<std::string>(p, "country", path), r.required<double>(p, "max_altitude_m", path)});
        }
    } else {
        cfg.catalogs.regulatory = builtin_regulatory();
        cfg.defaults_applied.emplace_back("regulatory.profiles", "builtin (EU 120 m, US 121.92 m, JP 150 m)");
    }
    const auto active = r.optional<std::string>(reg, "active", "regulatory", "EU");
    bool found = false;
    for (const auto &p : cfg.catalogs.regulatory)
        if (p.country == active) {
            cfg.regulatory = p;
            found = true;
        }
    if (!found)
        throw ConfigError("regulatory.active: unknown profile '" + active + "'", "regulatory.active", line_of(reg));

    parse_scenario(r, root, cfg);

    const YAML::Node grid = root["eve_grid"];
    r.allow(grid, {"extent_m", "points_per_axis", "height_m"}, "eve_grid");
    cfg.eve_grid.center = {cfg.scenario.bs_position.x, cfg.scenario.bs_position.y, 0.0};
    cfg.eve_grid.extent = r.optional<double>(grid, "extent_m", "eve_grid", 100.0);
    cfg.eve_grid.points_per_axis = r.optional<std::size_t>(grid, "points_per_axis", "eve_grid", 21);
    cfg.eve_grid.z = r.optional<double>(grid, "height_m", "eve_grid", 1.5);
    cfg.eve_grid.center.z = cfg.eve_grid.z;

    const YAML::Node opt = root["optimizer"];
    r.allow(opt, {"pso", "cd"}, "optimizer");
    const YAML::Node pso = is_map(opt) ? opt["pso"] : YAML::Node();
    r.allow(pso, {"particles", "iterations", "inertia", "cognitive", "social", "velocity_clamp", "threads"},
            "optimizer.pso");
    const std::string pp = "optimizer.pso";
    const PsoParams dp;
    cfg.pso.particles = r.optional<std::size_t>(pso, "particles", pp, dp.particles);
    cfg.pso.iterations = r.optional<std::size_t>(pso, "iterations", pp, dp.iterations);
    cfg.pso.inertia = r.optional<double>(pso, "inertia", pp, dp.inertia);
    cfg.pso.cognitive = r.optional<double>(pso, "cognitive", pp, dp.cognitive);
    cfg.pso.social = r.optional<double>(pso, "social", pp, dp.social);
    cfg.pso.velocity_clamp = r.optional<double>(pso, "velocity_clamp", pp, dp.velocity_clamp);
    cfg.pso.threads = r.optional<unsigned>(pso, "threads", pp, dp.threads);
    const YAML::Node cd = is_map(opt) ? opt["cd"] : YAML::Node();
    r.allow(cd, {"max_sweeps", "tolerance", "quantization_bits", "search_levels", "secrecy_inner_sweeps"},
            "optimizer.cd");
    const std::string cp = "optimizer.cd";
    const CdParams dc;
    cfg.cd.max_sweeps = r.optional<std::size_t>(cd, "max_sweeps", cp, dc.max_sweeps);
    cfg.cd.tolerance = r.optional<double>(cd, "tolerance", cp, dc.tolerance);
    cfg.cd.quantization_bits = r.optional<unsigned>(cd, "quantization_bits", cp, dc.quantization_bits);
    cfg.cd.search_levels = r.optional<std::size_t>(cd, "search_levels", cp, dc.search_levels);
    cfg.cd.secrecy_inner_sweeps = r.optional<std::size_t>(cd, "secrecy_inner_sweeps", cp, dc.secrecy_inner_sweeps);

    parse_experiment(r, root, cfg);
    if (cfg.experiment) cfg.pso.seed = cfg.experiment->seed;
    return cfg;
}

std::vector<std::string> validate_config(const Config &cfg) {
    auto out = validate_scenario(cfg.scenario, cfg.regulatory);
    const PsoParams &p = cfg.pso;
    if (p.particles == 0 || p.iterations == 0) out.emplace_back("optimizer.pso: particles and iterations must be > 0");
    if (!(p.inertia > 0.0 && p.inertia < 1.0)) out.emplace_back("optimizer.pso: inertia must lie in (0, 1)");
    if (!(p.cognitive > 0.0) || !(p.social > 0.0)) out.emplace_back("optimizer.pso: cognitive/social must be > 0");
    if (!(p.velocity_clamp > 0.0)) out.emplace_back("optimizer.pso: velocity_clamp must be > 0");
    if (cfg.cd.quantization_bits > 16) out.emplace_back("optimizer.cd: quantization_bits must be <= 16");
    if (cfg.eve_grid.points_per_axis < 2) out.emplace_back("eve_grid: points_per_axis must be >= 2");
    if (!(cfg.eve_grid.extent > 0.0)) out.emplace_back("eve_grid: extent_m must be > 0");
    if (cfg.eve_grid.z >= cfg.scenario.uav_altitude) out.emplace_back("eve_grid: height must be below the UAVs");
    for (const auto &u : cfg.catalogs.uavs)
        for (const auto &m : validate_uav(u)) out.push_back("uav_profiles: " + m);
    return out;
}

Config parse_config_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open configuration '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Config load_config(const std::filesystem::path &path) {
    Config cfg = parse_config_file(path);
    auto violations = validate_config(cfg);
    if (!violations.empty())
        throw ValidationError("configuration '" + path.string() + "' is invalid (" +
                                  std::to_string(violations.size()) + " violation(s))",
                              std::move(violations));
    return cfg;
}

std::string default_config_text() {
    return R"(# Four users on the corners of a 200 m square around the BS, one RIS-carrying UAV each.
scenario:
  carrier_frequency_ghz: 28
  uav_altitude_m: 50
  max_tx_power_w: 0.2
  power_budget_mode: per_user_cap
  reference_snr_db: 0
  bs:
    position_m: [0, 0, 10]
    antennas: 8
    antenna_spacing_wavelengths: 0.5
  users:
    square_side_m: 200
    height_m: 1.5
  region_m: [-150, 150, -150, 150]
  ris:
    rows: 16
    cols: 16
    pitch_wavelengths: 0.5
    amplitude: 1.0
    element_gain: 3.141592653589793
    per_element_power_w: 0.005
    controller_power_w: 0.5
    areal_density_kg_per_m2: 3.0
  uav_model: zeo_x4

regulatory:
  active: EU
  profiles:
    - {country: EU, max_altitude_m: 120}
    - {country: US, max_altitude_m: 121.92}
    - {country: JP, max_altitude_m: 150}

uav_profiles:
  - {name: zeo_x4, empty_mass_kg: 1.1, base_flight_time_min: 50, rotor_disk_area_m2: 0.16417322322758926, figure_of_merit: 0.6, max_payload_kg: 0.6}
  - {name: noa_6, empty_mass_kg: 4.5, base_flight_time_min: 40, rotor_disk_area_m2: 0.6804689687675491, figure_of_merit: 0.65, max_payload_kg: 2.0}
  - {name: if1200, empty_mass_kg: 8.0, base_flight_time_min: 43, rotor_disk_area_m2: 0.988489562081414, figure_of_merit: 0.7, max_payload_kg: 3.9}

eve_grid:
  extent_m: 100
  points_per_axis: 21
  height_m: 1.5

optimizer:
  pso: {particles: 30, iterations: 100, inertia: 0.729, cognitive: 1.49445, social: 1.49445, velocity_clamp: 0.5, threads: 1}
  cd: {max_sweeps: 50, tolerance: 1.0e-6, quantization_bits: 0, search_levels: 16, secrecy_inner_sweeps: 0}
)";
}

}  // namespace risuav
