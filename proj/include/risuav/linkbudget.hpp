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

#include "risuav/scenario.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace risuav {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

double wavelength(double frequency_hz);

// Far-field geometry of a source -> RIS -> destination link.
struct LinkGeometry {
    double d1 = 0.0;    // source to RIS center, m
    double d2 = 0.0;    // RIS center to destination, m
    double cos1 = 1.0;  // elevation cosine of the source seen from the RIS
    double cos2 = 1.0;  // elevation cosine of the destination seen from the RIS
};

LinkGeometry link_geometry(const Vec3 &source, const Vec3 &ris_pos, const Vec3 &destination);

/// Far-field path loss of a beamforming RIS, as a linear power ratio:
///
///   PL = 64 pi^3 d1^2 d2^2 / (Gt Gr G (M N)^2 dx dy lambda^2 A^2 cos1 cos2)
///
/// with dx = dy = pitch. Received power is transmit power / PL when the
/// element phases are aligned. Returns +inf for a zero reflection amplitude.
double ris_path_loss(const LinkGeometry &geom, const RisSpec &ris, double lambda, double tx_gain = 1.0,
                     double rx_gain = 1.0);

/// Path loss of one element with unit amplitude; the cascade of all elements
/// with coefficients from element_coefficients() reproduces ris_path_loss().
double element_path_loss(const LinkGeometry &geom, const RisSpec &ris, double lambda, double tx_gain = 1.0,
                         double rx_gain = 1.0);

// Element centers on the horizontal grid around ris_pos; index = row * cols + col.
std::vector<Vec3> element_centers(const RisSpec &ris, const Vec3 &ris_pos);

/// Per-element propagation coefficients A exp(-j 2 pi (|src - e_n| + |e_n - dst|) / lambda),
/// using exact spherical path lengths.
std::vector<cplx> element_coefficients(const Vec3 &source, const Vec3 &ris_pos, const RisSpec &ris,
                                       const Vec3 &destination, double lambda);

// sum_n exp(j phases[n]) coeffs[n]
cplx reflect_sum(std::span<const cplx> coeffs, std::span<const double> phases);

// Phases that co-phase every coefficient, wrapped to [0, 2 pi).
std::vector<double> aligned_phases(std::span<const cplx> coeffs);

double wrap_phase(double phase);

/// ULA steering vector, entries exp(-j 2 pi m spacing sin(psi) / lambda).
Eigen::VectorXcd bs_steering(double psi, std::size_t antennas, double spacing, double lambda);

/// Arrival angle at the BS array, measured from broadside. The array axis is
/// the global x axis, so sin(psi) is the x direction cosine towards the RIS.
double arrival_angle(const Vec3 &bs_pos, const Vec3 &ris_pos);

struct CascadeChannel {
    Eigen::VectorXcd h;      // length = BS antennas
    cplx scalar;             // reflect_sum over the elements
    double path_loss = 0.0;  // ris_path_loss of the link (aligned phases)
    double element_path_loss = 0.0;
};

/// User -> RIS -> BS channel: h = scalar / sqrt(element_path_loss) * a_bs(psi).
CascadeChannel cascaded_channel(const Vec3 &user, const Vec3 &ris_pos, const RisSpec &ris,
                                std::span<const double> phases, const Vec3 &bs_pos, std::size_t bs_antennas,
                                double bs_spacing, double lambda);

/// Same cascade towards a single-antenna eavesdropper at eve_pos.
cplx eve_channel(const Vec3 &user, const Vec3 &ris_pos, const RisSpec &ris, std::span<const double> phases,
                 const Vec3 &eve_pos, double lambda);

// Effective channels of all users, one column per user.
struct ChannelSet {
    Eigen::MatrixXcd H;
    std::vector<double> path_loss;
    std::vector<cplx> scalar;
};

ChannelSet build_channel_set(const Scenario &s, std::span<const Vec3> ris_positions,
                             std::span<const std::vector<double>> phases);

}  // namespace risuav
