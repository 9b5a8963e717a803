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
#include <numeric>

namespace risuav {

namespace {
constexpr std::size_t kGridPoints = 11;
constexpr int kRefinements = 8;
}  // namespace

bool feasible(const PowerAlloc &alloc, double slack) {
    const double tol = slack * std::max(1.0, alloc.budget);
    for (double p : alloc.p)
        if (!(p >= -tol)) return false;
    if (alloc.mode == PowerBudgetMode::PerUserCap)
        return std::all_of(alloc.p.begin(), alloc.p.end(), [&](double p) { return p <= alloc.budget + tol; });
    return std::accumulate(alloc.p.begin(), alloc.p.end(), 0.0) <= alloc.budget + tol;
}

std::vector<double> water_filling(std::span<const double> gains, double budget, double noise_power) {
    if (gains.empty()) throw DomainError("water_filling: empty gain vector");
    if (!(noise_power > 0.0)) throw DomainError("water_filling: noise power must be > 0");
    // Floor levels sigma^2 / g_k, strongest channel first. Zero gains never get power.
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < gains.size(); ++k) {
        if (gains[k] < 0.0) throw DomainError("water_filling: negative gain");
        if (gains[k] > 0.0) order.push_back(k);
    }
    std::vector<double> p(gains.size(), 0.0);
    if (order.empty() || !(budget > 0.0)) return p;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });

    double floor_sum = 0.0;
    double level = 0.0;
    std::size_t active = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const double floor_i = noise_power / gains[order[i]];
        const double candidate = (budget + floor_sum + floor_i) / static_cast<double>(i + 1);
        if (i > 0 && candidate <= floor_i) break;
        floor_sum += floor_i;
        level = candidate;
        active = i + 1;
    }
    for (std::size_t i = 0; i < active; ++i)
        p[order[i]] = std::max(0.0, level - noise_power / gains[order[i]]);
    return p;
}

PowerAlloc cd_power(std::span<const double> gains, PowerAlloc alloc, double noise_power, ObjectiveKind kind,
                    const PowerObjective &secrecy_objective, const CdParams &params) {
    if (gains.empty()) throw DomainError("cd_power: empty gain vector");
    for (double g : gains)
        if (!(g >= 0.0)) throw DomainError("cd_power: gains must be >= 0");
    const std::size_t k_users = gains.size();
    if (alloc.p.size() != k_users) alloc.p.assign(k_users, 0.0);

    if (kind == ObjectiveKind::Coverage) {
        if (alloc.mode == PowerBudgetMode::PerUserCap)
            std::fill(alloc.p.begin(), alloc.p.end(), alloc.budget);
        else
            alloc.p = water_filling(gains, alloc.budget, noise_power);
        return alloc;
    }

    if (!secrecy_objective) throw DomainError("cd_power: secrecy objective required");
    double value = secrecy_objective(alloc.p);
    for (std::size_t sweep = 0; sweep < params.max_sweeps; ++sweep) {
        const double start = value;
        for (std::size_t k = 0; k < k_users; ++k) {
            double cap = alloc.budget;
            if (alloc.mode == PowerBudgetMode::SumBudget) {
                double others = 0.0;
                for (std::size_t j = 0; j < k_users; ++j)
                    if (j != k) others += alloc.p[j];
                cap = std::max(0.0, alloc.budget - others);
            }
            double lo = 0.0;
            double hi = cap;
            double best_p = std::min(alloc.p[k], cap);
            alloc.p[k] = best_p;
            double best_v = secrecy_objective(alloc.p);
            for (int level = 0; level <= kRefinements && hi > lo; ++level) {
                const double step = (hi - lo) / static_cast<double>(kGridPoints - 1);
                for (std::size_t i = 0; i < kGridPoints; ++i) {
                    const double cand = (i + 1 == kGridPoints) ? hi : lo + step * static_cast<double>(i);
                    if (cand == best_p) continue;
                    alloc.p[k] = cand;
                    const double v = secrecy_objective(alloc.p);
                    if (v > best_v) {
                        best_v = v;
                        best_p = cand;
                    }
                }
                lo = std::max(0.0, best_p - step);
                hi = std::min(cap, best_p + step);
            }
            alloc.p[k] = best_p;
            value = best_v;
        }
        const double scale = std::max(std::abs(start), std::numeric_limits<double>::min());
        if (value - start <= params.tolerance * scale) break;
    }
    return alloc;
}

}  // namespace risuav
