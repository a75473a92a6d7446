// rsprec - rate-splitting precoding and link-level simulation for MU-MISO downlinks
// Copyright (C) 2026 the rsprec contributors
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

#include "rsprec/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace rsprec {

namespace {

double sqabs(std::complex<double> z) {
    return std::norm(z);
}

void check_dims(std::size_t n_users, const PrecoderSet& p, const arma::vec& sigma2) {
    if (p.n_users() != n_users)
        throw std::invalid_argument("bounds: precoder/estimate user count mismatch");
    if (sigma2.n_elem != n_users)
        throw std::invalid_argument("bounds: sigma2 must have one entry per user");
    if (p.p_c.n_elem != p.n_antennas())
        throw std::invalid_argument("bounds: common precoder length mismatch");
}

} // namespace

LinkStatistics link_statistics(const std::vector<ChannelEstimate>& estimates,
                               const PrecoderSet& p, const arma::vec& sigma2) {
    const arma::uword k = estimates.size();
    check_dims(k, p, sigma2);

    LinkStatistics s;
    s.t_c.set_size(k);
    s.t_p.set_size(k);
    s.gamma_c.set_size(k);
    s.gamma_p.set_size(k);

    for (arma::uword i = 0; i < k; ++i) {
        const arma::cx_vec& hh = estimates[i].h_hat;
        const arma::cx_mat& ce = estimates[i].c_err;

        double tp = 0.0;
        for (arma::uword j = 0; j < k; ++j) {
            const arma::cx_vec& pj = p.p_p.col(j);
            tp += sqabs(arma::cdot(hh, pj)) + std::real(arma::cdot(pj, ce * pj));
        }
        const double sig_c = sqabs(arma::cdot(hh, p.p_c));
        const double tc = sig_c + std::real(arma::cdot(p.p_c, ce * p.p_c)) + tp;

        const double sig_p = sqabs(arma::cdot(hh, p.p_p.col(i)));
        s.t_c(i) = tc;
        s.t_p(i) = tp;
        s.gamma_c(i) = sig_c / (tc - sig_c + sigma2(i));
        s.gamma_p(i) = sig_p / (tp - sig_p + sigma2(i));
    }
    return s;
}

CommonPrivate rate_lower_bounds(const LinkStatistics& stats) {
    return CommonPrivate{arma::log2(1.0 + stats.gamma_c), arma::log2(1.0 + stats.gamma_p)};
}

double sum_rate_lower_bound(const std::vector<ChannelEstimate>& estimates,
                            const PrecoderSet& p, const arma::vec& sigma2) {
    if (p.power() > 1.0 + 1e-6)
        throw std::invalid_argument(
            "sum_rate_lower_bound: precoder violates the unit power constraint");
    const CommonPrivate rates = rate_lower_bounds(link_statistics(estimates, p, sigma2));
    return arma::accu(rates.priv) + rates.common.min();
}

double sum_rate_true(const std::vector<arma::cx_vec>& channels, const PrecoderSet& p,
                     const arma::vec& sigma2) {
    const arma::uword k = channels.size();
    check_dims(k, p, sigma2);

    double sum = 0.0;
    double min_common = arma::datum::inf;
    for (arma::uword i = 0; i < k; ++i) {
        const arma::cx_vec& h = channels[i];
        double interf = 0.0;
        for (arma::uword j = 0; j < k; ++j)
            interf += sqabs(arma::cdot(h, p.p_p.col(j)));

        const double sig_p = sqabs(arma::cdot(h, p.p_p.col(i)));
        const double sig_c = sqabs(arma::cdot(h, p.p_c));
        sum += std::log2(1.0 + sig_p / (interf - sig_p + sigma2(i)));
        min_common = std::min(min_common, std::log2(1.0 + sig_c / (interf + sigma2(i))));
    }
    return sum + min_common;
}

CommonPrivate average_mse(const std::vector<ChannelEstimate>& estimates,
                          const PrecoderSet& p, const FilterWeightState& state,
                          const arma::vec& sigma2) {
    const arma::uword k = estimates.size();
    const LinkStatistics s = link_statistics(estimates, p, sigma2);

    CommonPrivate mse{arma::vec(k), arma::vec(k)};
    for (arma::uword i = 0; i < k; ++i) {
        const arma::cx_vec& hh = estimates[i].h_hat;
        const std::complex<double> hc = arma::cdot(hh, p.p_c);
        const std::complex<double> hp = arma::cdot(hh, p.p_p.col(i));
        mse.common(i) = 1.0 - 2.0 * std::real(state.g_c(i) * hc) +
                        sqabs(state.g_c(i)) * (s.t_c(i) + sigma2(i));
        mse.priv(i) = 1.0 - 2.0 * std::real(state.g_p(i) * hp) +
                      sqabs(state.g_p(i)) * (s.t_p(i) + sigma2(i));
    }
    return mse;
}

ReceiveFilters mmse_filters(const std::vector<ChannelEstimate>& estimates,
                            const PrecoderSet& p, const arma::vec& sigma2) {
    const arma::uword k = estimates.size();
    const LinkStatistics s = link_statistics(estimates, p, sigma2);

    ReceiveFilters f{arma::cx_vec(k), arma::cx_vec(k)};
    for (arma::uword i = 0; i < k; ++i) {
        const arma::cx_vec& hh = estimates[i].h_hat;
        f.common(i) = std::conj(arma::cdot(hh, p.p_c)) / (s.t_c(i) + sigma2(i));
        f.priv(i) = std::conj(arma::cdot(hh, p.p_p.col(i))) / (s.t_p(i) + sigma2(i));
    }
    return f;
}

MseWeights optimal_weights(const arma::vec& mse_c, const arma::vec& mse_p) {
    if (mse_c.min() <= 0.0 || mse_p.min() <= 0.0)
        throw std::invalid_argument("optimal_weights: MSEs must be strictly positive");
    return MseWeights{1.0 / mse_c, 1.0 / mse_p};
}

CommonPrivate awamse(const FilterWeightState& state, const CommonPrivate& mses) {
    if (state.u_c.min() <= 0.0 || state.u_p.min() <= 0.0)
        throw std::invalid_argument("awamse: weights must be strictly positive");
    return CommonPrivate{state.u_c % mses.common - arma::log2(state.u_c),
                         state.u_p % mses.priv - arma::log2(state.u_p)};
}

} // namespace rsprec
