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

#include "risuav/metrics.hpp"

#include "risuav/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace risuav {

double condition_number(const Eigen::MatrixXcd &H) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0) return 1.0;
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

namespace {

struct QrParts {
    Eigen::MatrixXcd r_inv;  // K x K
    Eigen::MatrixXcd q1;     // M x K
};

QrParts thin_qr(const Eigen::MatrixXcd &H) {
    const Eigen::Index m = H.rows();
    const Eigen::Index k = H.cols();
    if (k == 0) throw DomainError("zf_combiner: channel has no users");
    if (k > m) {
        std::ostringstream os;
        os << "zf_combiner: " << k << " users exceed " << m << " antennas";
        throw RankDeficientError(os.str(), std::numeric_limits<double>::infinity());
    }
    const double cond = condition_number(H);
    if (!(cond < kMaxConditionNumber)) {
        std::ostringstream os;
        os << "zf_combiner: channel matrix is rank deficient (condition " << cond << ")";
        throw RankDeficientError(os.str(), cond);
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(H);
    QrParts out;
    const Eigen::MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    out.r_inv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXcd::Identity(k, k));
    out.q1 = qr.householderQ() * Eigen::MatrixXcd::Identity(m, k);
    return out;
}

}  // namespace

Eigen::MatrixXcd zf_combiner(const Eigen::MatrixXcd &H) {
    // H = Q1 R  =>  (H^H H)^-1 H^H = R^-1 Q1^H
    const QrParts p = thin_qr(H);
    return p.r_inv * p.q1.adjoint();
}

std::vector<double> zf_noise_enhancement(const Eigen::MatrixXcd &H) {
    // (H^H H)^-1 = R^-1 R^-H, whose diagonal holds the squared row norms of R^-1.
    const QrParts p = thin_qr(H);
    std::vector<double> out(static_cast<std::size_t>(H.cols()));
    for (Eigen::Index i = 0; i < H.cols(); ++i) out[static_cast<std::size_t>(i)] = p.r_inv.row(i).squaredNorm();
    return out;
}

std::vector<double> post_zf_sinr(const Eigen::MatrixXcd &H, std::span<const double> powers, double noise_power) {
    if (powers.size() != static_cast<std::size_t>(H.cols()))
        throw DomainError("post_zf_sinr: one power per user required");
    if (!(noise_power > 0.0)) throw DomainError("post_zf_sinr: noise power must be > 0");
    const auto enh = zf_noise_enhancement(H);
    std::vector<double> out(enh.size());
    for (std::size_t k = 0; k < enh.size(); ++k) out[k] = powers[k] / (noise_power * enh[k]);
    return out;
}

double rate_from_snr(double snr) { return std::log2(1.0 + snr); }

double spectral_efficiency(std::span<const double> sinr) {
    double se = 0.0;
    for (double s : sinr) {
        if (s < 0.0) throw DomainError("spectral_efficiency: negative SINR");
        se += rate_from_snr(s);
    }
    return se;
}

double eve_rate(double power, cplx eve_gain, double noise_power) {
    return rate_from_snr(power * std::norm(eve_gain) / noise_power);
}

double eve_rate(const Scenario &s, std::size_t unit, const Vec3 &ris_pos, std::span<const double> phases,
                double power, const Vec3 &eve_pos) {
    const RisUnit &u = s.ris_units.at(unit);
    const cplx g = eve_channel(s.users.at(u.user), ris_pos, u.ris, phases, eve_pos, wavelength(s.carrier_frequency));
    return eve_rate(power, g, s.noise_power);
}

double secrecy_rate(double user_rate, double eve_rate) { return std::max(0.0, user_rate - eve_rate); }

double average_secrecy_rate(std::span<const double> user_rates, const std::vector<std::vector<double>> &eve_rates) {
    if (eve_rates.empty()) throw DomainError("average_secrecy_rate: empty grid");
    double total = 0.0;
    for (const auto &point : eve_rates) {
        if (point.size() != user_rates.size()) throw DomainError("average_secrecy_rate: rate count mismatch");
        double sum = 0.0;
        for (std::size_t k = 0; k < user_rates.size(); ++k) sum += secrecy_rate(user_rates[k], point[k]);
        total += sum;
    }
    return total / static_cast<double>(eve_rates.size());
}

MetricReport evaluate_metrics(const Scenario &s, std::span<const Vec3> ris_positions,
                              std::span<const std::vector<double>> phases, std::span<const double> powers,
                              const EveGrid *grid) {
    const ChannelSet cs = build_channel_set(s, ris_positions, phases);
    MetricReport rep;
    rep.per_user_sinr = post_zf_sinr(cs.H, powers, s.noise_power);
    rep.per_user_rate.reserve(rep.per_user_sinr.size());
    for (double x : rep.per_user_sinr) rep.per_user_rate.push_back(rate_from_snr(x));
    rep.total_se = spectral_efficiency(rep.per_user_sinr);
    if (grid == nullptr) return rep;

    const auto points = grid_points(*grid);
    std::vector<std::vector<double>> eve(points.size(), std::vector<double>(s.users.size(), 0.0));
    for (std::size_t e = 0; e < points.size(); ++e)
        for (std::size_t u = 0; u < s.ris_units.size(); ++u) {
            const std::size_t k = s.ris_units[u].user;
            eve[e][k] = eve_rate(s, u, ris_positions[u], phases[u], powers[k], points[e]);
        }
    rep.per_grid_secrecy.assign(points.size(), std::vector<double>(s.users.size(), 0.0));
    for (std::size_t e = 0; e < points.size(); ++e)
        for (std::size_t k = 0; k < s.users.size(); ++k)
            rep.per_grid_secrecy[e][k] = secrecy_rate(rep.per_user_rate[k], eve[e][k]);
    rep.average_secrecy_rate = average_secrecy_rate(rep.per_user_rate, eve);
    return rep;
}

double average_secrecy_rate(const Scenario &s, std::span<const Vec3> ris_positions,
                            std::span<const std::vector<double>> phases, std::span<const double> powers,
                            const EveGrid &grid) {
    return evaluate_metrics(s, ris_positions, phases, powers, &grid).average_secrecy_rate;
}

double calibrate_noise_power(const Scenario &s, double reference_snr_db) {
    if (s.ris_units.empty() || s.users.empty()) throw DomainError("calibrate_noise_power: empty scenario");
    const RisUnit &first = s.ris_units.front();
    const Vec3 user = s.users.at(first.user);
    RisSpec ris = first.ris;
    const auto [rows, cols] = element_grid_shape(kNominalElements);
    ris.rows = rows;
    ris.cols = cols;
    const Vec3 ris_pos{user.x, user.y, kNominalAltitude};
    const double lambda = wavelength(s.carrier_frequency);
    const auto coeffs = element_coefficients(user, ris_pos, ris, s.bs_position, lambda);
    const auto phases = aligned_phases(coeffs);
    const auto ch = cascaded_channel(user, ris_pos, ris, phases, s.bs_position, s.bs_antennas,
                                     s.bs_antenna_spacing, lambda);
    // Single user: the ZF SNR reduces to p |h|^2 / sigma^2.
    const double snr = std::pow(10.0, reference_snr_db / 10.0);
    return s.max_tx_power * ch.h.squaredNorm() / snr;
}

Scenario with_calibrated_noise(Scenario s) {
    if (s.reference_snr_db) s.noise_power = calibrate_noise_power(s, *s.reference_snr_db);
    return s;
}

}  // namespace risuav
