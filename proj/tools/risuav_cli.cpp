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
#include "risuav/experiment.hpp"
#include "risuav/metrics.hpp"
#include "risuav/optim.hpp"
#include "risuav/results.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

using namespace risuav;

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::string objective = "coverage";
    bool quiet = false;
};

ResultFormat pick_format(const Options &o, const std::string &path) {
    if (!o.format.empty()) return parse_format(o.format);
    return path.empty() ? ResultFormat::Csv : format_for_path(path);
}

void emit(const ResultTable &t, const Options &o, const std::string &path) {
    const ResultFormat fmt = pick_format(o, path);
    if (path.empty() || path == "-") {
        std::cout << (fmt == ResultFormat::Json ? to_json(t) : to_csv(t));
        return;
    }
    write_results(t, fmt, path);
    if (!o.quiet) std::cerr << "wrote " << t.rows.size() << " row(s) to " << path << "\n";
}

int cmd_validate(const Options &o) {
    const Config cfg = parse_config_file(o.config);
    const auto violations = validate_config(cfg);
    if (violations.empty()) {
        std::cout << o.config << ": ok";
        if (cfg.experiment) std::cout << " (experiment " << to_string(cfg.experiment->kind) << ")";
        std::cout << "\n";
        return 0;
    }
    std::cerr << o.config << ": " << violations.size() << " violation(s)\n";
    for (const auto &v : violations) std::cerr << "  - " << v << "\n";
    return 2;
}

int cmd_run(const Options &o) {
    Config cfg = load_config(o.config);
    if (o.seed) cfg.pso.seed = *o.seed;
    const Scenario s = with_calibrated_noise(cfg.scenario);
    const bool secrecy = o.objective == "secrecy";
    const SolveResult r = secrecy ? solve_secrecy(s, cfg.eve_grid, cfg.pso, cfg.cd) : solve_coverage(s, cfg.pso, cfg.cd);

    ResultTable t;
    t.columns = {{"unit", "-"}, {"x", "m"}, {"y", "m"}, {"z", "m"}, {"user", "-"},
                 {"power", "W"}, {"sinr", "-"}, {"rate", "bit/s/Hz"}};
    for (std::size_t k = 0; k < r.uav_positions.size(); ++k) {
        const auto &p = r.uav_positions[k];
        const std::size_t u = s.ris_units[k].user;
        t.rows.push_back({static_cast<double>(k), p.x, p.y, p.z, static_cast<double>(u), r.powers.p[u],
                          r.metrics.per_user_sinr[u], r.metrics.per_user_rate[u]});
    }
    t.metadata = {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"objective", to_string(r.objective_kind)},
                  {"seed", std::to_string(cfg.pso.seed)},
                  {"config_hash", cfg.config_hash},
                  {"noise_power_w", format_double(s.noise_power)},
                  {"spectral_efficiency_bit_per_s_hz", format_double(r.metrics.total_se)},
                  {"objective_value", format_double(r.objective_value)}};
    if (secrecy) t.metadata.emplace_back("average_secrecy_rate_bit_per_s_hz", format_double(r.metrics.average_secrecy_rate));
    for (const auto &[k, v] : cfg.defaults_applied)
        if (!k.starts_with("experiment.")) t.metadata.emplace_back("default " + k, v);
    emit(t, o, o.out);
    return 0;
}

int cmd_sweep(const Options &o) {
    Config cfg = load_config(o.config);
    if (!cfg.experiment) throw ConfigError("configuration has no 'experiment' section", "experiment");
    ExperimentSpec spec = *cfg.experiment;
    if (o.seed) spec.seed = *o.seed;
    ProgressSink progress;
    if (!o.quiet) progress = [](const std::string &m) { std::cerr << m << "\n"; };
    const ResultTable t = run_experiment(cfg, spec, progress);
    emit(t, o, o.out.empty() ? spec.output : o.out);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulation and optimization of RIS-carrying UAV networks"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    Options o;

    auto *validate = app.add_subcommand("validate", "Parse and validate a configuration");
    validate->add_option("-c,--config", o.config, "YAML configuration")->required()->check(CLI::ExistingFile);

    auto *run = app.add_subcommand("run", "Optimize the configured scenario once");
    run->add_option("-c,--config", o.config, "YAML configuration")->required()->check(CLI::ExistingFile);
    run->add_option("-o,--out", o.out, "Output file (stdout when omitted)");
    run->add_option("-f,--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("-s,--seed", o.seed, "Override the PSO seed");
    run->add_option("--objective", o.objective, "coverage or secrecy")->check(CLI::IsMember({"coverage", "secrecy"}));
    run->add_flag("-q,--quiet", o.quiet);

    auto *sweep = app.add_subcommand("sweep", "Run the configured experiment sweep");
    sweep->add_option("-c,--config", o.config, "YAML configuration")->required()->check(CLI::ExistingFile);
    sweep->add_option("-o,--out", o.out, "Output file (defaults to experiment.output)");
    sweep->add_option("-f,--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("-s,--seed", o.seed, "Override the experiment seed");
    sweep->add_flag("-q,--quiet", o.quiet);

    auto *defaults = app.add_subcommand("defaults", "Print the default configuration");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*defaults) {
            std::cout << default_config_text();
            return 0;
        }
        if (*validate) return cmd_validate(o);
        if (*run) return cmd_run(o);
        return cmd_sweep(o);
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto &v : e.violations()) std::cerr << "  - " << v << "\n";
        return 2;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
        std::cerr << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
