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

#include "risuav/linkbudget.hpp"
#include "risuav/metrics.hpp"
#include "risuav/scenario.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace risuav {

enum class ObjectiveKind { Coverage, Secrecy };

const char *to_string(ObjectiveKind kind);

// ---------------------------------------------------------------------------
// Phase coordinate descent
// ---------------------------------------------------------------------------

/// Phases of one RIS in [0, 2 pi). With quantization_bits = B >= 1 every phase
/// lies on the grid 2 pi q / 2^B.
struct PhaseConfig {
    std::vector<double> phases;
    unsigned quantization_bits = 0;
};

struct CdParams {
    std::size_t max_sweeps = 50;
    double tolerance = 1e-6;  // relative objective gain per sweep below which CD stops
    unsigned quantization_bits = 0;
    // Continuous phases without a closed-form coordinate maximizer: uniform
    // levels scanned before the golden-section refinement.
    std::size_t search_levels = 16;
    // CD sweeps run inside each PSO fitness evaluation of the secrecy pipeline.
    // The full max_sweeps budget is always spent on the final placement.
    std::size_t secrecy_inner_sweeps = 0;
};

/// Objective over a phase vector, evaluated incrementally: the solver only
/// ever changes one coordinate at a time.
class PhaseObjective {
public:
    virtual ~PhaseObjective() = default;

    virtual std::size_t size() const = 0;
    virtual void reset(std::span<const double> phases) = 0;
    virtual double value() const = 0;
    // Objective if coordinate n were set to `phase`, others unchanged.
    virtual double value_with(std::size_t n, double phase) const = 0;
    virtual void set(std::size_t n, double phase) = 0;
    // Exact maximizer over coordinate n when one is known in closed form.
    virtual std::optional<double> coordinate_maximizer(std::size_t /*n*/) const { return std::nullopt; }
};

// Wraps a plain function; every evaluation recomputes from scratch.
class FunctionObjective final : public PhaseObjective {
public:
    using Fn = std::function<double(std::span<const double>)>;
    FunctionObjective(std::size_t n, Fn fn) : fn_(std::move(fn)), x_(n, 0.0) {}

    std::size_t size() const override { return x_.size(); }
    void reset(std::span<const double> phases) override;
    double value() const override { return value_; }
    double value_with(std::size_t n, double phase) const override;
    void set(std::size_t n, double phase) override;

private:
    Fn fn_;
    mutable std::vector<double> x_;
    double value_ = 0.0;
};

/// |sum_n exp(j phi_n) c_n|^2. The per-coordinate maximizer co-phases element n
/// with the sum of all other elements.
class CoherentSumObjective final : public PhaseObjective {
public:
    explicit CoherentSumObjective(std::vector<cplx> coeffs) : c_(std::move(coeffs)), phi_(c_.size(), 0.0) {}

    std::size_t size() const override { return c_.size(); }
    void reset(std::span<const double> phases) override;
    double value() const override { return std::norm(sum_); }
    double value_with(std::size_t n, double phase) const override;
    void set(std::size_t n, double phase) override;
    std::optional<double> coordinate_maximizer(std::size_t n) const override;

    cplx sum() const { return sum_; }

private:
    std::vector<cplx> c_;
    std::vector<double> phi_;
    cplx sum_{0.0, 0.0};
};

/// Grid-averaged secrecy rate contributed by one RIS unit:
///   mean_e max(0, log2(1 + a |S_B|^2) - log2(1 + b_e |S_e|^2))
/// with S_B = sum_n exp(j phi_n) legit[n] and S_e = sum_n exp(j phi_n) eve[e][n].
class SecrecyPhaseObjective final : public PhaseObjective {
public:
    SecrecyPhaseObjective(std::vector<cplx> legit, double legit_scale, std::vector<std::vector<cplx>> eve,
                          std::vector<double> eve_scale);

    std::size_t size() const override { return legit_.size(); }
    void reset(std::span<const double> phases) override;
    double value() const override { return evaluate(sum_b_, sum_e_); }
    double value_with(std::size_t n, double phase) const override;
    void set(std::size_t n, double phase) override;

private:
    double evaluate(cplx sb, const std::vector<cplx> &se) const;

    std::vector<cplx> legit_;
    double a_;
    std::vector<std::vector<cplx>> eve_by_element_;  // [n][e]
    std::vector<double> b_;
    std::vector<double> phi_;
    cplx sum_b_{0.0, 0.0};
    std::vector<cplx> sum_e_;
    mutable std::vector<cplx> scratch_;
};

double quantize_phase(double phase, unsigned bits);

// Aligned phases quantized to 2^bits levels, with the common reference phase
// chosen to maximize |sum_n c_n exp(j phi_n)|. bits = 0 gives aligned_phases().
std::vector<double> aligned_quantized_phases(std::span<const cplx> coeffs, unsigned bits);

// Called after every coordinate visit with the objective before and after it.
using CdObserver = std::function<void(std::size_t coordinate, double before, double after)>;

/// Cyclic coordinate descent (maximization) in ascending element order.
/// Continuous mode uses the closed-form coordinate maximizer when the
/// objective provides one, otherwise a level scan plus golden-section search.
/// Quantized mode tries every level. A coordinate only moves on strict
/// improvement, so ties keep the incumbent. Stops when a sweep gains less than
/// tolerance (relative) or after max_sweeps.
PhaseConfig cd_phases(PhaseObjective &objective, PhaseConfig init, std::size_t max_sweeps, double tolerance,
                      std::size_t search_levels = 16, const CdObserver &observer = {});

PhaseConfig cd_phases(PhaseObjective &objective, PhaseConfig init, const CdParams &params,
                      const CdObserver &observer = {});

// ---------------------------------------------------------------------------
// Power allocation
// ---------------------------------------------------------------------------

struct PowerAlloc {
    std::vector<double> p;  // W
    PowerBudgetMode mode = PowerBudgetMode::PerUserCap;
    double budget = 0.0;  // per-user cap or total, W
};

bool feasible(const PowerAlloc &alloc, double slack = 1e-12);

/// Water-filling solution of max sum log2(1 + g_k p_k / sigma^2) s.t. sum p <= budget.
std::vector<double> water_filling(std::span<const double> gains, double budget, double noise_power);

using PowerObjective = std::function<double(std::span<const double>)>;

/// Power update inside the alternating optimization.
///  - coverage, per-user cap: full power (the rate is monotone in p_k)
///  - coverage, sum budget: water-filling
///  - secrecy: per-user grid refinement over the feasible interval of p_k,
///    sweeping users until the objective gains less than the tolerance.
PowerAlloc cd_power(std::span<const double> gains, PowerAlloc alloc, double noise_power, ObjectiveKind kind,
                    const PowerObjective &secrecy_objective = {}, const CdParams &params = {});

// ---------------------------------------------------------------------------
// Particle swarm
// ---------------------------------------------------------------------------

struct PsoParams {
    std::size_t particles = 30;
    std::size_t iterations = 100;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    double velocity_clamp = 0.5;  // fraction of the box width per dimension
    std::uint64_t seed = 42;
    unsigned threads = 1;
};

struct SearchBox {
    std::vector<double> lower;
    std::vector<double> upper;
};

struct PsoResult {
    std::vector<double> best_position;
    double best_value = 0.0;
    std::vector<double> trace;  // global best after initialization and after each iteration
    std::size_t evaluations = 0;
};

using Fitness = std::function<double(std::span<const double>)>;

/// Global-best PSO maximizing `fitness` over `box`. Random draws for particle i
/// at iteration t come from a generator seeded by (seed, i, t), so results do
/// not depend on evaluation order or thread count.
PsoResult pso(const Fitness &fitness, const SearchBox &box, const PsoParams &params);

// ---------------------------------------------------------------------------
// End-to-end pipelines
// ---------------------------------------------------------------------------

struct SolveResult {
    std::vector<Vec3> uav_positions;  // per RIS unit
    std::vector<PhaseConfig> phases;  // per RIS unit
    PowerAlloc powers;                // per user
    double objective_value = 0.0;
    ObjectiveKind objective_kind = ObjectiveKind::Coverage;
    std::vector<double> trace;
    MetricReport metrics;
};

// Horizontal coordinates (x0, y0, x1, y1, ...) of every UAV, bounded by the region.
SearchBox placement_box(const Scenario &s);
std::vector<Vec3> positions_from_vector(const Scenario &s, std::span<const double> x);

struct InnerSolution {
    std::vector<PhaseConfig> phases;
    PowerAlloc powers;
    double objective = 0.0;
};

/// Phase and power optimization for fixed UAV positions; this is the PSO
/// fitness. `cd_sweeps` bounds the phase CD sweeps. Placements whose BS
/// steering vectors are linearly dependent score 0.
InnerSolution optimize_at(const Scenario &s, std::span<const Vec3> positions, ObjectiveKind kind,
                          const EveGrid *grid, const CdParams &cd, std::size_t cd_sweeps);

SolveResult solve_coverage(const Scenario &s, const PsoParams &pso_params, const CdParams &cd);
SolveResult solve_secrecy(const Scenario &s, const EveGrid &grid, const PsoParams &pso_params, const CdParams &cd);

}  // namespace risuav
