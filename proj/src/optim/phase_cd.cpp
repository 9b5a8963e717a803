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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace risuav {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvGolden = 0.6180339887498949;
constexpr int kGoldenIterations = 12;
}  // namespace

const char *to_string(ObjectiveKind kind) { return kind == ObjectiveKind::Coverage ? "coverage" : "secrecy"; }

void FunctionObjective::reset(std::span<const double> phases) {
    x_.assign(phases.begin(), phases.end());
    value_ = fn_(x_);
}

double FunctionObjective::value_with(std::size_t n, double phase) const {
    const double saved = x_[n];
    x_[n] = phase;
    const double v = fn_(x_);
    x_[n] = saved;
    return v;
}

void FunctionObjective::set(std::size_t n, double phase) {
    x_[n] = phase;
    value_ = fn_(x_);
}

void CoherentSumObjective::reset(std::span<const double> phases) {
    if (phases.size() != c_.size()) throw DomainError("CoherentSumObjective: size mismatch");
    phi_.assign(phases.begin(), phases.end());
    sum_ = reflect_sum(c_, phi_);
}

double CoherentSumObjective::value_with(std::size_t n, double phase) const {
    const cplx delta = std::polar(1.0, phase) - std::polar(1.0, phi_[n]);
    return std::norm(sum_ + delta * c_[n]);
}

void CoherentSumObjective::set(std::size_t n, double phase) {
    sum_ += (std::polar(1.0, phase) - std::polar(1.0, phi_[n])) * c_[n];
    phi_[n] = phase;
}

std::optional<double> CoherentSumObjective::coordinate_maximizer(std::size_t n) const {
    const cplx rest = sum_ - std::polar(1.0, phi_[n]) * c_[n];
    if (std::abs(rest) == 0.0 || std::abs(c_[n]) == 0.0) return phi_[n];
    return wrap_phase(std::arg(rest) - std::arg(c_[n]));
}

SecrecyPhaseObjective::SecrecyPhaseObjective(std::vector<cplx> legit, double legit_scale,
                                             std::vector<std::vector<cplx>> eve, std::vector<double> eve_scale)
    : legit_(std::move(legit)), a_(legit_scale), b_(std::move(eve_scale)), phi_(legit_.size(), 0.0) {
    if (eve.size() != b_.size() || b_.empty()) throw DomainError("SecrecyPhaseObjective: eve scale mismatch");
    eve_by_element_.assign(legit_.size(), std::vector<cplx>(eve.size()));
    for (std::size_t e = 0; e < eve.size(); ++e) {
        if (eve[e].size() != legit_.size()) throw DomainError("SecrecyPhaseObjective: eve coefficient mismatch");
        for (std::size_t n = 0; n < legit_.size(); ++n) eve_by_element_[n][e] = eve[e][n];
    }
    sum_e_.assign(b_.size(), cplx{});
}

void SecrecyPhaseObjective::reset(std::span<const double> phases) {
    if (phases.size() != legit_.size()) throw DomainError("SecrecyPhaseObjective: size mismatch");
    phi_.assign(phases.begin(), phases.end());
    sum_b_ = reflect_sum(legit_, phi_);
    std::fill(sum_e_.begin(), sum_e_.end(), cplx{});
    for (std::size_t n = 0; n < phi_.size(); ++n) {
        const cplx w = std::polar(1.0, phi_[n]);
        const auto &col = eve_by_element_[n];
        for (std::size_t e = 0; e < col.size(); ++e) sum_e_[e] += w * col[e];
    }
}

double SecrecyPhaseObjective::evaluate(cplx sb, const std::vector<cplx> &se) const {
    const double rb = std::log2(1.0 + a_ * std::norm(sb));
    double total = 0.0;
    for (std::size_t e = 0; e < se.size(); ++e) total += std::max(0.0, rb - std::log2(1.0 + b_[e] * std::norm(se[e])));
    return total / static_cast<double>(se.size());
}

double SecrecyPhaseObjective::value_with(std::size_t n, double phase) const {
    const cplx delta = std::polar(1.0, phase) - std::polar(1.0, phi_[n]);
    const auto &col = eve_by_element_[n];
    scratch_.resize(sum_e_.size());
    for (std::size_t e = 0; e < col.size(); ++e) scratch_[e] = sum_e_[e] + delta * col[e];
    return evaluate(sum_b_ + delta * legit_[n], scratch_);
}

void SecrecyPhaseObjective::set(std::size_t n, double phase) {
    const cplx delta = std::polar(1.0, phase) - std::polar(1.0, phi_[n]);
    sum_b_ += delta * legit_[n];
    const auto &col = eve_by_element_[n];
    for (std::size_t e = 0; e < col.size(); ++e) sum_e_[e] += delta * col[e];
    phi_[n] = phase;
}

double quantize_phase(double phase, unsigned bits) {
    if (bits == 0) return wrap_phase(phase);
    const double levels = std::ldexp(1.0, static_cast<int>(bits));
    const double step = kTwoPi / levels;
    double q = std::round(wrap_phase(phase) / step);
    if (q >= levels) q -= levels;
    return q * step;
}

std::vector<double> aligned_quantized_phases(std::span<const cplx> coeffs, unsigned bits) {
    if (bits == 0) return aligned_phases(coeffs);
    const std::size_t n = coeffs.size();
    const double step = kTwoPi / std::ldexp(1.0, static_cast<int>(bits));
    // Sliding the reference over one level step moves each element up one level exactly once.
    std::vector<double> phases(n);
    std::vector<std::pair<double, std::size_t>> crossings(n);
    cplx sum{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const double arg = std::arg(coeffs[k]);
        phases[k] = quantize_phase(-arg, bits);
        sum += coeffs[k] * std::polar(1.0, phases[k]);
        double at = std::fmod(arg + 0.5 * step, step);
        if (at < 0.0) at += step;
        crossings[k] = {at, k};
    }
    std::sort(crossings.begin(), crossings.end());
    double best = std::norm(sum);
    std::size_t best_count = 0;
    const cplx bump = std::polar(1.0, step) - 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = crossings[i].second;
        sum += coeffs[k] * std::polar(1.0, phases[k]) * bump;
        if (const double v = std::norm(sum); v > best) {
            best = v;
            best_count = i + 1;
        }
    }
    for (std::size_t i = 0; i < best_count; ++i) {
        double &p = phases[crossings[i].second];
        p = quantize_phase(p + step, bits);
    }
    return phases;
}

namespace {

// Best phase for coordinate n; returns the incumbent unless something is strictly better.
double best_coordinate_phase(const PhaseObjective &obj, std::size_t n, double current_phase, double current_value,
                             unsigned bits, std::size_t levels, double &best_value) {
    double best_phi = current_phase;
    best_value = current_value;
    auto consider = [&](double phi) {
        const double v = obj.value_with(n, phi);
        if (v > best_value) {
            best_value = v;
            best_phi = phi;
        }
    };

    if (bits > 0) {
        const auto count = static_cast<std::size_t>(1) << bits;
        const double step = kTwoPi / static_cast<double>(count);
        for (std::size_t q = 0; q < count; ++q) {
            const double phi = static_cast<double>(q) * step;
            if (phi != current_phase) consider(phi);
        }
        return best_phi;
    }

    if (auto closed = obj.coordinate_maximizer(n)) {
        if (*closed != current_phase) consider(*closed);
        return best_phi;
    }

    const std::size_t count = std::max<std::size_t>(levels, 3);
    const double step = kTwoPi / static_cast<double>(count);
    for (std::size_t i = 1; i < count; ++i) consider(wrap_phase(current_phase + step * static_cast<double>(i)));

    // Golden-section refinement around the best level.
    double lo = best_phi - step;
    double hi = best_phi + step;
    double x1 = hi - kInvGolden * (hi - lo);
    double x2 = lo + kInvGolden * (hi - lo);
    double f1 = obj.value_with(n, wrap_phase(x1));
    double f2 = obj.value_with(n, wrap_phase(x2));
    for (int it = 0; it < kGoldenIterations; ++it) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvGolden * (hi - lo);
            f1 = obj.value_with(n, wrap_phase(x1));
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvGolden * (hi - lo);
            f2 = obj.value_with(n, wrap_phase(x2));
        }
    }
    const double mid = wrap_phase(0.5 * (lo + hi));
    if (mid != current_phase) consider(mid);
    return best_phi;
}

}  // namespace

PhaseConfig cd_phases(PhaseObjective &objective, PhaseConfig init, std::size_t max_sweeps, double tolerance,
                      std::size_t search_levels, const CdObserver &observer) {
    if (init.phases.size() != objective.size())
        throw DomainError("cd_phases: initial configuration has the wrong length");
    const unsigned bits = init.quantization_bits;
    for (double &p : init.phases) p = quantize_phase(p, bits);
    objective.reset(init.phases);

    double value = objective.value();
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        const double start = value;
        for (std::size_t n = 0; n < init.phases.size(); ++n) {
            double candidate_value = value;
            const double phi =
                best_coordinate_phase(objective, n, init.phases[n], value, bits, search_levels, candidate_value);
            const double before = value;
            if (phi != init.phases[n]) {
                objective.set(n, phi);
                init.phases[n] = phi;
                value = objective.value();
            }
            if (observer) observer(n, before, value);
        }
        // Resynchronize incremental state once per sweep.
        objective.reset(init.phases);
        value = objective.value();
        const double scale = std::max(std::abs(start), std::numeric_limits<double>::min());
        if (value - start <= tolerance * scale) break;
    }
    return init;
}

PhaseConfig cd_phases(PhaseObjective &objective, PhaseConfig init, const CdParams &params,
                      const CdObserver &observer) {
    init.quantization_bits = params.quantization_bits;
    return cd_phases(objective, std::move(init), params.max_sweeps, params.tolerance, params.search_levels, observer);
}

}  // namespace risuav
