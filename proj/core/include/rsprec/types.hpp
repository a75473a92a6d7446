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

#pragma once

#include <armadillo>
#include <cstdint>
#include <vector>

namespace rsprec {

/// Scenario scalars for one downlink setup. Powers are linear, rates are in
/// bits per channel use. The training and data noise variance is tied to the
/// transmit power: sigma_k^2 = 1 / power_dl for every user.
struct SystemConfig {
    arma::uword n_antennas = 16; ///< transmit antennas M
    arma::uword n_users = 5;     ///< single-antenna users K
    arma::uword n_pilots = 3;    ///< downlink pilots T_dl (T_dl <= M)
    double power_dl = 1.0;       ///< downlink transmit power, linear scale
    double alpha_c = 0.5;        ///< common power fraction used at initialization
    std::uint64_t seed = 1;
    double tol = 1e-5;           ///< stop when |delta objective| drops below this
    arma::uword max_iter = 200;

    double noise_var() const { return 1.0 / power_dl; }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// M x T_dl pilot matrix with unit-norm columns.
struct PilotMatrix {
    arma::cx_mat phi;
};

/// Per-user channel covariance and the drawn realization.
struct UserChannelModel {
    arma::cx_mat cov; ///< Hermitian PSD, M x M
    arma::cx_vec h;   ///< true channel, length M
};

/// LMMSE estimate and its error covariance.
struct ChannelEstimate {
    arma::cx_vec h_hat; ///< length M
    arma::cx_mat c_err; ///< Hermitian PSD, M x M
};

/// Common precoder and per-user private precoders (column k serves user k).
/// Finalized precoders satisfy ||p_c||^2 + ||P_p||_F^2 = 1; intermediate
/// iterates of the solver intentionally do not.
struct PrecoderSet {
    arma::cx_vec p_c;
    arma::cx_mat p_p; ///< M x K

    arma::uword n_antennas() const { return p_p.n_rows; }
    arma::uword n_users() const { return p_p.n_cols; }

    /// Squared Frobenius norm of the stacked precoder [p_c, P_p].
    double power() const;

    /// Copy scaled to unit power. Throws std::invalid_argument on zero input.
    PrecoderSet normalized() const;
};

/// Per-user totals of received power and the SINR lower bounds built from
/// them. t_c(k) >= t_p(k) always, since the common-stream terms are
/// nonnegative.
struct LinkStatistics {
    arma::vec t_c;     ///< total common-slot received power per user
    arma::vec t_p;     ///< total private-slot received power per user
    arma::vec gamma_c; ///< common SINR lower bound per user
    arma::vec gamma_p; ///< private SINR lower bound per user
};

/// Scalar receive filters and MSE weights per user, for the common and
/// private streams.
struct FilterWeightState {
    arma::cx_vec g_c;
    arma::cx_vec g_p;
    arma::vec u_c;
    arma::vec u_p;
};

/// Per-user (common, private) value pair used for rates, MSEs and AWAMSEs.
struct CommonPrivate {
    arma::vec common;
    arma::vec priv;
};

/// Per-user scalar receive filters.
struct ReceiveFilters {
    arma::cx_vec common;
    arma::cx_vec priv;
};

/// Per-user MSE weights.
struct MseWeights {
    arma::vec common;
    arma::vec priv;
};

} // namespace rsprec
