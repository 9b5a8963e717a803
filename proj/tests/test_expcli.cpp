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

#include "risuav/config.hpp"
#include "risuav/errors.hpp"
#include "risuav/experiment.hpp"
#include "risuav/linkbudget.hpp"
#include "risuav/results.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace risuav;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

const std::filesystem::path kSource = RISUAV_SOURCE_DIR;

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string replace(std::string text, const std::string &from, const std::string &to) {
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

std::filesystem::path temp_dir() {
    auto d = std::filesystem::temp_directory_path() / "risuav_tests";
    std::filesystem::create_directories(d);
    return d;
}

ResultTable sample_table() {
    ResultTable t;
    t.columns = {{"name", "-"}, {"value", "W"}, {"note", "-"}};
    t.rows = {{std::string("a"), 0.1, std::string("plain")},
              {std::string("b,c"), 1e-300, std::string("has \"quotes\"")},
              {std::string("d"), -2.5, std::string("line\nbreak")}};
    t.metadata = {{"seed", "42"}, {"config_hash", "abc"}};
    return t;
}

}  // namespace

TEST_CASE("default configuration reproduces the default scenario") {
    const Config cfg = parse_config(default_config_text());
    const Scenario d = default_scenario();
    const Scenario &s = cfg.scenario;
    CHECK(s.users.size() == 4);
    CHECK(s.ris_units.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(s.users[k] == d.users[k]);
        CHECK(s.ris_units[k].user == k);
        CHECK(s.ris_units[k].ris.element_count() == 256);
        CHECK_THAT(s.ris_units[k].ris.pitch, WithinRel(d.ris_units[k].ris.pitch, 1e-12));
        CHECK(s.ris_units[k].uav.name == "zeo_x4");
        CHECK_THAT(s.ris_units[k].uav.rotor_disk_area, WithinRel(d.ris_units[k].uav.rotor_disk_area, 1e-12));
    }
    CHECK(s.carrier_frequency == d.carrier_frequency);
    CHECK(s.bs_position == d.bs_position);
    CHECK(s.reference_snr_db == d.reference_snr_db);
    CHECK(cfg.regulatory.country == "EU");
    CHECK(validate_config(cfg).empty());
}

TEST_CASE("bundled default config file matches the built-in text") {
    CHECK(slurp(kSource / "configs" / "default.yaml") == default_config_text());
    const Config cfg = load_config(kSource / "configs" / "default.yaml");
    CHECK(cfg.scenario.users.size() == 4);
    CHECK(cfg.config_hash == fnv1a_hex(default_config_text()));
}

TEST_CASE("all bundled experiment configs load") {
    for (const char *name : {"pathloss.yaml", "flighttime.yaml", "coverage.yaml", "secrecy.yaml"}) {
        INFO(name);
        const Config cfg = load_config(kSource / "configs" / name);
        CHECK(cfg.experiment.has_value());
    }
}

TEST_CASE("missing carrier frequency names the key") {
    const std::string text = replace(default_config_text(), "  carrier_frequency_ghz: 28\n", "");
    try {
        (void)parse_config(text);
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(e.key() == "scenario.carrier_frequency_ghz");
        CHECK_THAT(std::string(e.what()), ContainsSubstring("carrier_frequency_ghz"));
    }
}

TEST_CASE("unknown keys and bad values report the line") {
    SECTION("unknown key") {
        const std::string text = replace(default_config_text(), "  uav_altitude_m: 50\n", "  uav_altitude_m: 50\n  altitude_ft: 3\n");
        try {
            (void)parse_config(text);
            FAIL("expected ConfigError");
        } catch (const ConfigError &e) {
            CHECK(e.key() == "scenario.altitude_ft");
            CHECK(e.line() == 5);
        }
    }
    SECTION("wrong type") {
        const std::string text = replace(default_config_text(), "max_tx_power_w: 0.2", "max_tx_power_w: lots");
        try {
            (void)parse_config(text);
            FAIL("expected ConfigError");
        } catch (const ConfigError &e) {
            CHECK(e.key() == "scenario.max_tx_power_w");
            CHECK(e.line() == 5);
        }
    }
    SECTION("syntax error") {
        CHECK_THROWS_AS(parse_config("scenario: [1, 2\n"), ConfigError);
    }
    SECTION("unknown profile") {
        CHECK_THROWS_AS(parse_config(replace(default_config_text(), "uav_model: zeo_x4", "uav_model: nope")), ConfigError);
    }
}

TEST_CASE("altitude above the regulatory cap is a validation violation") {
    const std::string text = replace(default_config_text(), "uav_altitude_m: 50", "uav_altitude_m: 200");
    const Config cfg = parse_config(text);
    const auto v = validate_config(cfg);
    REQUIRE_FALSE(v.empty());
    CHECK_THAT(v.front(), ContainsSubstring("altitude"));
    const auto path = temp_dir() / "high.yaml";
    std::ofstream(path) << text;
    CHECK_THROWS_AS(load_config(path), ValidationError);
}

TEST_CASE("defaults are recorded") {
    const Config cfg = parse_config("scenario:\n  carrier_frequency_ghz: 10\n");
    CHECK(cfg.scenario.users.size() == 4);
    bool found = false;
    for (const auto &[k, v] : cfg.defaults_applied)
        if (k == "scenario.uav_altitude_m") found = v == "50";
    CHECK(found);
    CHECK_THAT(cfg.scenario.ris_units[0].ris.pitch, WithinRel(wavelength(10e9) / 2, 1e-12));
}

TEST_CASE("experiment kinds require their axes") {
    const std::string base = default_config_text();
    CHECK_THROWS_AS(parse_config(base + "experiment:\n  kind: pathloss_sweep\n  axes: {elements: [16]}\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(base + "experiment:\n  kind: coverage\n  axes: {elements: []}\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(base + "experiment:\n  kind: dance\n"), ConfigError);
    const Config ok = parse_config(base + "experiment:\n  kind: secrecy\n  seed: 7\n  axes: {elements: [64]}\n");
    REQUIRE(ok.experiment);
    CHECK(ok.experiment->seed == 7);
    CHECK(ok.experiment->axes.altitudes_m == std::vector<double>{50.0});
}

TEST_CASE("path loss sweep rows and monotonicity") {
    Config cfg = parse_config(default_config_text());
    ExperimentSpec spec;
    spec.kind = ExperimentKind::PathlossSweep;
    spec.axes.elements = {64, 256, 1024};
    spec.axes.frequencies_hz = {2.4e9, 10e9, 28e9};
    spec.axes.altitudes_m = {50};
    const ResultTable t = run_experiment(cfg, spec);
    REQUIRE(t.rows.size() == 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const double pl = t.number(3 * i + j, "path_loss");
            if (j > 0) CHECK(pl > t.number(3 * i + j - 1, "path_loss"));
            if (i > 0) CHECK(pl < t.number(3 * (i - 1) + j, "path_loss"));
        }
    bool has_hash = false;
    for (const auto &[k, v] : t.metadata) has_hash |= k == "config_hash" && v == cfg.config_hash;
    CHECK(has_hash);
}

TEST_CASE("metadata lists only axis defaults the experiment uses") {
    const Config cfg = parse_config(default_config_text() +
                                    "experiment:\n  kind: pathloss_sweep\n  axes: {elements: [16], frequency_ghz: [10]}\n");
    const ResultTable t = run_experiment(cfg, *cfg.experiment);
    std::vector<std::string> keys;
    for (const auto &[k, v] : t.metadata) keys.push_back(k);
    const auto has = [&](const std::string &k) { return std::find(keys.begin(), keys.end(), k) != keys.end(); };
    CHECK(has("default experiment.axes.altitude_m"));
    CHECK_FALSE(has("default experiment.axes.area_m2"));
    CHECK_FALSE(has("default experiment.axes.reference_snr_db"));
    CHECK_FALSE(has("default experiment.axes.uav_models"));
}

TEST_CASE("flight time sweep decreases with area") {
    const Config cfg = load_config(kSource / "configs" / "flighttime.yaml");
    const ResultTable t = run_experiment(cfg, *cfg.experiment);
    REQUIRE(t.rows.size() == cfg.experiment->axes.areas_m2.size());
    for (std::size_t r = 1; r < t.rows.size(); ++r) CHECK(t.number(r, "flight_time") < t.number(r - 1, "flight_time"));
    CHECK_THAT(t.number(t.rows.size() - 1, "flight_time"), WithinRel(35.0, 1e-9));
}

TEST_CASE("secrecy sweep has one row per point") {
    Config cfg = parse_config(default_config_text());
    cfg.regulatory = {"JP", 150.0};
    cfg.pso.particles = 4;
    cfg.pso.iterations = 2;
    cfg.cd.max_sweeps = 2;
    cfg.eve_grid.points_per_axis = 3;
    for (auto &u : cfg.scenario.ris_units) u.ris.rows = u.ris.cols = 4;
    ExperimentSpec spec;
    spec.kind = ExperimentKind::Secrecy;
    spec.axes.elements = {16};
    spec.axes.reference_snr_db = {0, 5};
    spec.axes.altitudes_m = {50, 150};
    const ResultTable t = run_experiment(cfg, spec);
    CHECK(t.rows.size() == 4);
    CHECK(t.number(3, "altitude") == 150.0);
    CHECK(t.number(3, "reference_snr") == 5.0);
}

TEST_CASE("failing sweep points are identified") {
    Config cfg = parse_config(default_config_text());
    ExperimentSpec spec;
    spec.kind = ExperimentKind::Coverage;
    spec.axes.elements = {16};
    spec.axes.reference_snr_db = {0};
    spec.axes.altitudes_m = {200};
    try {
        (void)run_experiment(cfg, spec);
        FAIL("expected ValidationError");
    } catch (const ValidationError &e) {
        CHECK_THAT(std::string(e.what()), ContainsSubstring("altitude_m=200"));
    }
}

TEST_CASE("CSV output") {
    ResultTable empty;
    empty.columns = {{"x", "m"}, {"y", "-"}};
    CHECK(to_csv(empty) == "x[m],y[-]\n");

    const std::string csv = to_csv(sample_table());
    CHECK_THAT(csv, ContainsSubstring("# seed: 42\n"));
    CHECK_THAT(csv, ContainsSubstring("name[-],value[W],note[-]\n"));
    CHECK_THAT(csv, ContainsSubstring("\"b,c\",1e-300,\"has \"\"quotes\"\"\"\n"));
    CHECK_THAT(csv, ContainsSubstring("d,-2.5,\"line\nbreak\"\n"));
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("result files are byte-stable and JSON round-trips") {
    const ResultTable t = sample_table();
    const auto dir = temp_dir();
    write_results(t, ResultFormat::Csv, dir / "a.csv");
    write_results(t, ResultFormat::Csv, dir / "b.csv");
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    write_results(t, ResultFormat::Json, dir / "a.json");
    CHECK(table_from_json(slurp(dir / "a.json")) == t);
    CHECK(format_for_path("x.json") == ResultFormat::Json);
    CHECK(format_for_path("x.csv") == ResultFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("write failures name the path") {
    const auto blocker = temp_dir() / "not_a_dir";
    std::ofstream(blocker) << "x";
    try {
        write_results(sample_table(), ResultFormat::Csv, blocker / "out.csv");
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK_THAT(std::string(e.what()), ContainsSubstring("not_a_dir"));
    }
}

TEST_CASE("FNV-1a reference vectors") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
