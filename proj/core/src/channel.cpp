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

#include "rsprec/channel.hpp"

#include "rsprec/linalg.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace rsprec {

CovarianceModel CovarianceModel::identity() {
    CovarianceModel m;
    m.kind = CovarianceKind::identity;
    return m;
}

CovarianceModel CovarianceModel::exponential(double rho) {
    CovarianceModel m;
    m.kind = CovarianceKind::exponential;
    m.rho = rho;
    return m;
}

CovarianceModel CovarianceModel::rank_limited(arma::uword rank, double decay) {
    CovarianceModel m;
    m.kind = CovarianceKind::rank_limited;
    m.rank = rank;
    m.decay = decay;
    return m;
}

arma::cx_mat synth_covariance(arma::uword m, const CovarianceModel& model, Rng& rng) {
    if (m < 1)
        throw std::invalid_argument("synth_covariance: m must be positive");

    switch (model.kind) {
    case CovarianceKind::identity:
        return arma::cx_mat(arma::eye(m, m), arma::zeros(m, m));

    case CovarianceKind::exponential: {
        if (!(model.rho >= 0.0 && model.rho < 1.0))
            throw std::invalid_argument("synth_covariance: rho must lie in [0, 1)");
        arma::mat c(m, m);
        for (arma::uword i = 0; i < m; ++i)
            for (arma::uword j = 0; j < m; ++j)
                c(i, j) = std::pow(model.rho, static_cast<double>(i > j ? i - j : j - i));
        return arma::cx_mat(c, arma::zeros(m, m)); // trace is already m
    }

    case CovarianceKind::rank_limited: {
        if (model.rank < 1 || model.rank > m)
            throw std::invalid_argument("synth_covariance: rank must lie in 1..m");
        if (!(model.decay > 0.0 && model.decay <= 1.0))
            throw std::invalid_argument("synth_covariance: decay must lie in (0, 1]");
        // Haar-random eigenbasis with geometrically decaying eigenvalues.
        arma::cx_mat q, r;
        if (!arma::qr_econ(q, r, randn_cn(m, model.rank, 1.0, rng)))
            throw std::runtime_error("synth_covariance: QR factorization failed");
        arma::vec ev(model.rank);
        for (arma::uword i = 0; i < model.rank; ++i)
            ev(i) = std::pow(model.decay, static_cast<double>(i));
        arma::cx_mat c = hermitize(q * arma::diagmat(ev) * q.t());
        c *= static_cast<double>(m) / std::real(arma::trace(c));
        return c;
    }
    }
    throw std::invalid_argument("synth_covariance: unknown covariance kind");
}

PilotMatrix make_pilot_matrix(arma::uword m, arma::uword t_dl, PilotKind kind, Rng& rng) {
    if (t_dl < 1 || t_dl > m)
        throw std::invalid_argument("make_pilot_matrix: requires 1 <= t_dl <= m");

    arma::cx_mat phi(m, t_dl);
    if (kind == PilotKind::dft_truncated) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(m));
        const double step = -2.0 * arma::datum::pi / static_cast<double>(m);
        for (arma::uword j = 0; j < t_dl; ++j)
            for (arma::uword i = 0; i < m; ++i)
                phi(i, j) = std::polar(scale, step * static_cast<double>(i * j));
    } else {
        arma::cx_mat q, r;
        if (!arma::qr_econ(q, r, randn_cn(m, t_dl, 1.0, rng)))
            throw std::runtime_error("make_pilot_matrix: QR factorization failed");
        phi = q;
    }
    return PilotMatrix{std::move(phi)};
}

arma::cx_vec observe(const PilotMatrix& pilot, const arma::cx_vec& h, double sigma2,
                     Rng& rng) {
    if (h.n_elem != pilot.phi.n_rows)
        throw std::invalid_argument("observe: channel/pilot dimension mismatch");
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("observe: sigma2 must be positive");
    return pilot.phi.t() * h + randn_cn(pilot.phi.n_cols, sigma2, rng);
}

ChannelEstimate lmmse_estimate(const arma::cx_mat& cov, const PilotMatrix& pilot,
                               double sigma2, const arma::cx_vec& y) {
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("lmmse_estimate: sigma2 must be positive");
    if (cov.n_rows != cov.n_cols || cov.n_rows != pilot.phi.n_rows)
        throw std::invalid_argument("lmmse_estimate: covariance/pilot dimension mismatch");
    if (y.n_elem != pilot.phi.n_cols)
        throw std::invalid_argument("lmmse_estimate: observation dimension mismatch");

    const arma::cx_mat cphi = cov * pilot.phi; // M x T
    arma::cx_mat gram = hermitize(pilot.phi.t() * cphi);
    gram.diag() += sigma2;

    // w = (Phi^H C Phi + sigma2 I)^-1 Phi^H C, so h_hat = w^H y.
    const arma::cx_mat w = solve_hpd(gram, cphi.t());

    ChannelEstimate est;
    est.h_hat = w.t() * y;
    est.c_err = hermitize(cov - cphi * w);
    return est;
}

} // namespace rsprec
