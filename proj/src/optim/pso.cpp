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
#include <random>
#include <thread>

namespace risuav {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream for one (particle, iteration) pair.
std::mt19937_64 stream_for(std::uint64_t seed, std::size_t particle, std::size_t iteration) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ static_cast<std::uint64_t>(particle));
    s = splitmix64(s ^ (static_cast<std::uint64_t>(iteration) << 32));
    return std::mt19937_64(s);
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void evaluate_all(const Fitness &fitness, const std::vector<std::vector<double>> &x, std::vector<double> &out,
                  unsigned threads) {
    auto eval = [&](std::size_t i) {
        const double v = fitness(x[i]);
        out[i] = std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
    };
    const std::size_t n = x.size();
    const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (t == 1) {
        for (std::size_t i = 0; i < n; ++i) eval(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(t);
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += t) eval(i);
        });
}

}  // namespace

PsoResult pso(const Fitness &fitness, const SearchBox &box, const PsoParams &params) {
    const std::size_t dims = box.lower.size();
    if (dims == 0 || box.upper.size() != dims) throw DomainError("pso: bounds must be non-empty and matching");
    for (std::size_t d = 0; d < dims; ++d)
        if (!(box.upper[d] > box.lower[d])) throw DomainError("pso: degenerate bounds in dimension " + std::to_string(d));
    if (params.particles == 0) throw DomainError("pso: need at least one particle");
    if (!(params.velocity_clamp > 0.0)) throw DomainError("pso: velocity clamp must be > 0");

    const std::size_t np = params.particles;
    std::vector<double> vmax(dims);
    for (std::size_t d = 0; d < dims; ++d) vmax[d] = params.velocity_clamp * (box.upper[d] - box.lower[d]);

    std::vector<std::vector<double>> x(np, std::vector<double>(dims));
    std::vector<std::vector<double>> v(np, std::vector<double>(dims));
    for (std::size_t i = 0; i < np; ++i) {
        auto rng = stream_for(params.seed, i, 0);
        for (std::size_t d = 0; d < dims; ++d) {
            x[i][d] = box.lower[d] + uniform01(rng) * (box.upper[d] - box.lower[d]);
            v[i][d] = (2.0 * uniform01(rng) - 1.0) * vmax[d];
        }
    }

    std::vector<double> fx(np);
    evaluate_all(fitness, x, fx, params.threads);

    PsoResult res;
    res.evaluations = np;
    std::vector<std::vector<double>> pbest = x;
    std::vector<double> pbest_val = fx;
    std::size_t g = 0;
    for (std::size_t i = 1; i < np; ++i)
        if (pbest_val[i] > pbest_val[g]) g = i;
    res.best_position = pbest[g];
    res.best_value = pbest_val[g];
    res.trace.push_back(res.best_value);

    for (std::size_t it = 1; it <= params.iterations; ++it) {
        for (std::size_t i = 0; i < np; ++i) {
            auto rng = stream_for(params.seed, i, it);
            for (std::size_t d = 0; d < dims; ++d) {
                const double r1 = uniform01(rng);
                const double r2 = uniform01(rng);
                double vel = params.inertia * v[i][d] + params.cognitive * r1 * (pbest[i][d] - x[i][d]) +
                             params.social * r2 * (res.best_position[d] - x[i][d]);
                vel = std::clamp(vel, -vmax[d], vmax[d]);
                double pos = x[i][d] + vel;
                if (pos < box.lower[d] || pos > box.upper[d]) {
                    pos = std::clamp(pos, box.lower[d], box.upper[d]);
                    vel = 0.0;
                }
                x[i][d] = pos;
                v[i][d] = vel;
            }
        }
        evaluate_all(fitness, x, fx, params.threads);
        res.evaluations += np;
        for (std::size_t i = 0; i < np; ++i) {
            if (fx[i] > pbest_val[i]) {
                pbest_val[i] = fx[i];
                pbest[i] = x[i];
            }
        }
        // Lowest index wins ties.
        for (std::size_t i = 0; i < np; ++i) {
            if (pbest_val[i] > res.best_value) {
                res.best_value = pbest_val[i];
                res.best_position = pbest[i];
            }
        }
        res.trace.push_back(res.best_value);
    }
    return res;
}

}  // namespace risuav
