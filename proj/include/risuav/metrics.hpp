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
#include "risuav/scenario.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace risuav {

// Condition number above which a channel matrix is treated as rank deficient.
inline constexpr double kMaxConditionNumber = 1e12;

struct MetricReport {
    std::vector<double> per_user_sinr;
    std::vector<double> per_user_rate;  // bit/s/Hz
    double total_se = 0.0;
    // [grid point][user] secrecy rate; empty when no grid was evaluated.
    std::vector<std::vector<double>> per_grid_secrecy;
    double average_secrecy_rate = 0.0;
};

// 2-norm condition number of H (ratio of extreme singular values).
double condition_number(const Eigen::MatrixXcd &H);

/// Zero-forcing receive combiner W = (H^H H)^-1 H^H for an M x K channel with
/// K <= M. Throws RankDeficientError carrying the condition estimate.
Eigen::MatrixXcd zf_combiner(const Eigen::MatrixXcd &H);

// Diagonal of (H^H H)^-1, the per-user noise enhancement of the ZF receiver.
std::vector<double> zf_noise_enhancement(const Eigen::MatrixXcd &H);

/// Post-ZF SINR_k = p_k / (sigma^2 [(H^H H)^-1]_kk). Interference is nulled.
std::vector<double> post_zf_sinr(const Eigen::MatrixXcd &H, std::span<const double> powers, double noise_power);

double rate_from_snr(double snr);

// sum_k log2(1 + sinr_k), bit/s/Hz.
double spectral_efficiency(std::span<const double> sinr);

// log2(1 + p |g|^2 / sigma^2) for a single-antenna eavesdropper.
double eve_rate(double power, cplx eve_gain, double noise_power);

/// Rate leaked by RIS unit `unit` (with its `phases` and transmit `power`) to an
/// eavesdropper at `eve_pos`.
double eve_rate(const Scenario &s, std::size_t unit, const Vec3 &ris_pos, std::span<const double> phases,
                double power, const Vec3 &eve_pos);

// max(0, user_rate - eve_rate)
double secrecy_rate(double user_rate, double eve_rate);

/// Mean over grid points of sum_k secrecy_rate(user_rates[k], eve_rates[e][k]).
/// Summation runs in index order.
double average_secrecy_rate(std::span<const double> user_rates, const std::vector<std::vector<double>> &eve_rates);

/// Coverage metrics (and, when `grid` is given, secrecy metrics) for a full
/// configuration. positions/phases are per RIS unit, powers per user.
MetricReport evaluate_metrics(const Scenario &s, std::span<const Vec3> ris_positions,
                              std::span<const std::vector<double>> phases, std::span<const double> powers,
                              const EveGrid *grid = nullptr);

double average_secrecy_rate(const Scenario &s, std::span<const Vec3> ris_positions,
                            std::span<const std::vector<double>> phases, std::span<const double> powers,
                            const EveGrid &grid);

inline constexpr std::size_t kNominalElements = 256;
inline constexpr double kNominalAltitude = 50.0;

/// Noise power that makes the post-ZF SNR of a nominal link equal to
/// reference_snr_db: first user, a 16x16 RIS (pitch and amplitude from the
/// first unit) directly above it at 50 m, phases aligned, full power.
double calibrate_noise_power(const Scenario &s, double reference_snr_db);

// Copy of s with noise_power derived from s.reference_snr_db (unchanged if unset).
Scenario with_calibrated_noise(Scenario s);

}  // namespace risuav
