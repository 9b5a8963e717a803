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

#include "risuav/linkbudget.hpp"

#include "risuav/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace risuav {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0)) throw DomainError("wavelength: frequency must be > 0");
    return kSpeedOfLight / frequency_hz;
}

LinkGeometry link_geometry(const Vec3 &source, const Vec3 &ris_pos, const Vec3 &destination) {
    return {distance(source, ris_pos), distance(ris_pos, destination), elevation_cosine(ris_pos, source),
            elevation_cosine(ris_pos, destination)};
}

double element_path_loss(const LinkGeometry &g, const RisSpec &ris, double lambda, double tx_gain,
                         double rx_gain) {
    if (!(g.d1 > 0.0) || !(g.d2 > 0.0)) throw DomainError("ris_path_loss: distances must be > 0");
    if (!(g.cos1 > 0.0) || !(g.cos2 > 0.0)) throw DomainError("ris_path_loss: elevation cosines must be > 0");
    if (!(lambda > 0.0)) throw DomainError("ris_path_loss: wavelength must be > 0");
    const double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
    const double num = 64.0 * pi3 * g.d1 * g.d1 * g.d2 * g.d2;
    const double den = tx_gain * rx_gain * ris.element_gain * ris.pitch * ris.pitch * lambda * lambda * g.cos1 * g.cos2;
    return num / den;
}

double ris_path_loss(const LinkGeometry &g, const RisSpec &ris, double lambda, double tx_gain, double rx_gain) {
    const double unit = element_path_loss(g, ris, lambda, tx_gain, rx_gain);
    const double n = static_cast<double>(ris.element_count());
    const double array_gain = n * n * ris.amplitude * ris.amplitude;
    return unit / array_gain;
}

std::vector<Vec3> element_centers(const RisSpec &ris, const Vec3 &ris_pos) {
    std::vector<Vec3> out;
    out.reserve(ris.element_count());
    const double r0 = 0.5 * static_cast<double>(ris.rows - 1);
    const double c0 = 0.5 * static_cast<double>(ris.cols - 1);
    for (std::size_t r = 0; r < ris.rows; ++r)
        for (std::size_t c = 0; c < ris.cols; ++c)
            out.push_back({ris_pos.x + (static_cast<double>(c) - c0) * ris.pitch,
                           ris_pos.y + (static_cast<double>(r) - r0) * ris.pitch, ris_pos.z});
    return out;
}

std::vector<cplx> element_coefficients(const Vec3 &source, const Vec3 &ris_pos, const RisSpec &ris,
                                       const Vec3 &destination, double lambda) {
    const auto centers = element_centers(ris, ris_pos);
    std::vector<cplx> out;
    out.reserve(centers.size());
    for (const auto &e : centers) {
        // Reduce the path length to a fraction of a wavelength before taking the phase.
        const double cycles = (distance(source, e) + distance(e, destination)) / lambda;
        const double frac = cycles - std::floor(cycles);
        out.push_back(std::polar(ris.amplitude, -kTwoPi * frac));
    }
    return out;
}

cplx reflect_sum(std::span<const cplx> coeffs, std::span<const double> phases) {
    if (coeffs.size() != phases.size())
        throw DomainError("reflect_sum: " + std::to_string(phases.size()) + " phases for " +
                          std::to_string(coeffs.size()) + " elements");
    cplx s{0.0, 0.0};
    for (std::size_t n = 0; n < coeffs.size(); ++n) s += std::polar(1.0, phases[n]) * coeffs[n];
    return s;
}

double wrap_phase(double phase) {
    double w = std::fmod(phase, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

std::vector<double> aligned_phases(std::span<const cplx> coeffs) {
    std::vector<double> out;
    out.reserve(coeffs.size());
    for (const auto &c : coeffs) out.push_back(wrap_phase(-std::arg(c)));
    return out;
}

Eigen::VectorXcd bs_steering(double psi, std::size_t antennas, double spacing, double lambda) {
    Eigen::VectorXcd a(static_cast<Eigen::Index>(antennas));
    const double step = kTwoPi * spacing * std::sin(psi) / lambda;
    for (std::size_t m = 0; m < antennas; ++m)
        a(static_cast<Eigen::Index>(m)) = std::polar(1.0, -step * static_cast<double>(m));
    return a;
}

double arrival_angle(const Vec3 &bs_pos, const Vec3 &ris_pos) {
    const double d = distance(bs_pos, ris_pos);
    if (!(d > 0.0)) throw DomainError("arrival_angle: RIS coincides with the BS");
    return std::asin((ris_pos.x - bs_pos.x) / d);
}

CascadeChannel cascaded_channel(const Vec3 &user, const Vec3 &ris_pos, const RisSpec &ris,
                                std::span<const double> phases, const Vec3 &bs_pos, std::size_t bs_antennas,
                                double bs_spacing, double lambda) {
    if (phases.size() != ris.element_count())
        throw DomainError("cascaded_channel: " + std::to_string(phases.size()) + " phases for " +
                          std::to_string(ris.element_count()) + " elements");
    const LinkGeometry geom = link_geometry(user, ris_pos, bs_pos);
    CascadeChannel out;
    out.element_path_loss = element_path_loss(geom, ris, lambda);
    out.path_loss = ris_path_loss(geom, ris, lambda);
    const auto coeffs = element_coefficients(user, ris_pos, ris, bs_pos, lambda);
    out.scalar = reflect_sum(coeffs, phases);
    const Eigen::VectorXcd a = bs_steering(arrival_angle(bs_pos, ris_pos), bs_antennas, bs_spacing, lambda);
    out.h = (out.scalar / std::sqrt(out.element_path_loss)) * a;
    return out;
}

cplx eve_channel(const Vec3 &user, const Vec3 &ris_pos, const RisSpec &ris, std::span<const double> phases,
                 const Vec3 &eve_pos, double lambda) {
    if (phases.size() != ris.element_count())
        throw DomainError("eve_channel: " + std::to_string(phases.size()) + " phases for " +
                          std::to_string(ris.element_count()) + " elements");
    const LinkGeometry geom = link_geometry(user, ris_pos, eve_pos);
    const auto coeffs = element_coefficients(user, ris_pos, ris, eve_pos, lambda);
    return reflect_sum(coeffs, phases) / std::sqrt(element_path_loss(geom, ris, lambda));
}

ChannelSet build_channel_set(const Scenario &s, std::span<const Vec3> ris_positions,
                             std::span<const std::vector<double>> phases) {
    const std::size_t k_users = s.ris_units.size();
    if (ris_positions.size() != k_users || phases.size() != k_users)
        throw DomainError("build_channel_set: need one position and one phase vector per RIS unit");
    const double lambda = wavelength(s.carrier_frequency);
    ChannelSet out;
    out.H.resize(static_cast<Eigen::Index>(s.bs_antennas), static_cast<Eigen::Index>(k_users));
    out.path_loss.resize(k_users);
    out.scalar.resize(k_users);
    for (std::size_t u = 0; u < k_users; ++u) {
        const RisUnit &unit = s.ris_units[u];
        const auto ch = cascaded_channel(s.users.at(unit.user), ris_positions[u], unit.ris, phases[u], s.bs_position,
                                         s.bs_antennas, s.bs_antenna_spacing, lambda);
        out.H.col(static_cast<Eigen::Index>(unit.user)) = ch.h;
        out.path_loss[unit.user] = ch.path_loss;
        out.scalar[unit.user] = ch.scalar;
    }
    return out;
}

}  // namespace risuav
