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

#include "rsprec/types.hpp"

#include <vector>

namespace rsprec {

// Training-based SINR lower bounds, average MSEs, MMSE receive filters and
// the weighted-MSE quantities they induce. Estimation-error covariances are
// charged to the interference-plus-noise terms, which keeps every rate here
// achievable under imperfect CSI. All functions are pure.

/// Received-power totals and SINR lower bounds per user.
LinkStatistics link_statistics(const std::vector<ChannelEstimate>& estimates,
                               const PrecoderSet& p, const arma::vec& sigma2);

/// log2(1 + gamma) componentwise for the common and private streams.
CommonPrivate rate_lower_bounds(const LinkStatistics& stats);

/// Sum of private rate bounds plus the minimum common rate bound across
/// users. Requires ||P||_F^2 <= 1 + 1e-6. A zero common precoder
/// contributes zero common rate.
double sum_rate_lower_bound(const std::vector<ChannelEstimate>& estimates,
                            const PrecoderSet& p, const arma::vec& sigma2);

/// Sum rate evaluated with the true channels and no error-covariance charge
/// (genie CSI reference metric, reported separately from the lower bound).
double sum_rate_true(const std::vector<arma::cx_vec>& channels, const PrecoderSet& p,
                     const arma::vec& sigma2);

/// Average common/private MSEs for the given receive filters.
CommonPrivate average_mse(const std::vector<ChannelEstimate>& estimates,
                          const PrecoderSet& p, const FilterWeightState& state,
                          const arma::vec& sigma2);

/// MSE-minimizing scalar receive filters.
ReceiveFilters mmse_filters(const std::vector<ChannelEstimate>& estimates,
                            const PrecoderSet& p, const arma::vec& sigma2);

/// Reciprocal-MSE weights; requires strictly positive MSEs.
MseWeights optimal_weights(const arma::vec& mse_c, const arma::vec& mse_p);

/// Augmented weighted average MSE: xi = u * eps - log2(u) componentwise.
CommonPrivate awamse(const FilterWeightState& state, const CommonPrivate& mses);

} // namespace rsprec
