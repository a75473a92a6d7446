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

#include "rsprec/rng.hpp"
#include "rsprec/types.hpp"

namespace rsprec {

/// Synthetic channel covariance families. All produce a Hermitian PSD matrix
/// with trace normalized to the antenna count.
enum class CovarianceKind {
    identity,    ///< uncorrelated antennas
    exponential, ///< C(i,j) = rho^|i-j|, rho in [0, 1)
    rank_limited ///< random eigenbasis, `rank` geometrically decaying eigenvalues
};

struct CovarianceModel {
    CovarianceKind kind = CovarianceKind::exponential;
    double rho = 0.7;
    arma::uword rank = 2;
    double decay = 0.5;

    static CovarianceModel identity();
    static CovarianceModel exponential(double rho);
    static CovarianceModel rank_limited(arma::uword rank, double decay = 0.5);
};

enum class PilotKind {
    dft_truncated,  ///< first T_dl columns of the scaled M-point DFT matrix
    random_unitary  ///< Haar-random orthonormal columns
};

/// Hermitian PSD covariance with trace normalized to m. identity and
/// exponential models are deterministic; rank_limited draws its eigenbasis
/// from rng.
arma::cx_mat synth_covariance(arma::uword m, const CovarianceModel& model, Rng& rng);

/// M x T_dl pilot matrix with unit-norm columns; dft_truncated columns are
/// additionally orthogonal. Requires 1 <= t_dl <= m.
PilotMatrix make_pilot_matrix(arma::uword m, arma::uword t_dl, PilotKind kind, Rng& rng);

/// Noisy training observation y = Phi^H h + z, z ~ CN(0, sigma2 I).
arma::cx_vec observe(const PilotMatrix& pilot, const arma::cx_vec& h, double sigma2,
                     Rng& rng);

/// LMMSE estimate from the observation y:
///   h_hat = C Phi (Phi^H C Phi + sigma2 I)^-1 y
///   C_err = C - C Phi (Phi^H C Phi + sigma2 I)^-1 Phi^H C
ChannelEstimate lmmse_estimate(const arma::cx_mat& cov, const PilotMatrix& pilot,
                               double sigma2, const arma::cx_vec& y);

} // namespace rsprec
