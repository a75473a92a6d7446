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

// Alternating weighted-MSE solver for one-layer rate splitting.
//
// The unit-power constraint is folded into the objective by scaling the
// receive filters with the precoder norm, which replaces the noise variance
// sigma_k^2 with sigma_k^2 ||P||_F^2 everywhere. Filters, weights and the
// per-candidate precoders then all have closed forms; the only search is
// over the user index that pins the common-stream term. User indices are
// zero-based throughout.

/// Receive filters with the power-scaled noise term. Requires ||P||_F > 0.
ReceiveFilters scaled_filters(const std::vector<ChannelEstimate>& estimates,
                              const PrecoderSet& p, const arma::vec& sigma2);

/// Weights with the power-scaled noise term; invariant under P -> cP.
MseWeights scaled_weights(const std::vector<ChannelEstimate>& estimates,
                          const PrecoderSet& p, const arma::vec& sigma2);

/// System matrices of the fixed-k_c quadratic:
///   a = u_c |g_c|^2 (h h^H + C_err + sigma^2 I)   at user k_c
///   b = sum_i u_p,i |g_p,i|^2 sigma_i^2 I
///   c = sum_i u_p,i |g_p,i|^2 (h_i h_i^H + C_err,i)
struct CandidateSystemMatrices {
    arma::cx_mat a;
    arma::cx_mat b;
    arma::cx_mat c;
};

CandidateSystemMatrices candidate_matrices(arma::uword k_c,
                                           const std::vector<ChannelEstimate>& estimates,
                                           const FilterWeightState& state,
                                           const arma::vec& sigma2);

/// Closed-form stationary precoders for a fixed common-stream user index:
///   p_c = (a + b)^-1 u_c g_c^* h_kc,   p_p,j = (a + b + c)^-1 u_p,j g_p,j^* h_j.
/// The result intentionally violates the unit-power constraint; the final
/// rescaling happens at the end of the solve.
PrecoderSet precoder_candidate(arma::uword k_c,
                               const std::vector<ChannelEstimate>& estimates,
                               const FilterWeightState& state, const arma::vec& sigma2);

/// Scaled-noise AWAMSE objective: sum_j xi_p,j + max_k xi_c,k.
double total_objective(const std::vector<ChannelEstimate>& estimates,
                       const PrecoderSet& p, const FilterWeightState& state,
                       const arma::vec& sigma2);

enum class StopReason {
    tolerance,      ///< |delta objective| below tol
    no_improvement, ///< no candidate index improved on the incumbent
    max_iter,
    closed_form     ///< non-iterative method (baseline bookkeeping only)
};

const char* to_string(StopReason reason);

struct SolveTrace {
    /// Accepted objective after each iteration; non-increasing by construction.
    std::vector<double> objective_per_iter;
    /// Objective at the incumbent precoder right after the filter/weight
    /// update of each accepted iteration (recorded for transparency; the two
    /// sequences are evaluated under different filter/weight states).
    std::vector<double> objective_pre_update;
    /// Chosen common-stream user index per accepted iteration (zero-based).
    std::vector<arma::uword> k_min_per_iter;
    arma::uword iterations = 0;
    StopReason converged_by = StopReason::max_iter;
};

struct SolveResult {
    PrecoderSet precoder; ///< unit power within 1e-12
    SolveTrace trace;
};

/// Alternating solve: update scaled filters and weights, build the K
/// candidate precoders, accept the best one unless it no longer improves,
/// stop on tolerance/no-improvement/max_iter, then rescale to unit power.
/// Requires a nonzero initial precoder with power at most 1.
SolveResult run_awamse_rs(const SystemConfig& config,
                          const std::vector<ChannelEstimate>& estimates,
                          const PrecoderSet& p_init);

/// Common precoder: alpha_c times the dominant left singular vector of the
/// stacked estimates; private precoders: (1 - alpha_c) times the normalized
/// MMSE precoder. Total power is alpha_c^2 + (1-alpha_c)^2 <= 1.
PrecoderSet init_precoder(const std::vector<ChannelEstimate>& estimates, double alpha_c,
                          const PrecoderSet& p_mmse);

} // namespace rsprec
