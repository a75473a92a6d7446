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

#include "rsprec/awamse_rs.hpp"
#include "rsprec/channel.hpp"
#include "rsprec/types.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rsprec {

enum class Method { awamse_rs, awamse_no_rs, mmse };

/// Stable identifier used in configs and CSV output:
/// "awamse-rs", "awamse-nors", "mmse".
std::string method_id(Method m);
std::optional<Method> method_from_id(std::string_view id);

/// Whether user covariances are redrawn for every channel realization or
/// drawn once and shared by all trials. Only matters for random covariance
/// models.
enum class CovarianceRedraw { per_trial, fixed };

/// Full description of one Monte-Carlo experiment. The sweep output is a
/// pure function of this struct.
struct SweepSpec {
    arma::uword m = 16;
    arma::uword k = 5;
    arma::uword t_dl = 3;
    double alpha_c = 0.5;
    std::vector<double> powers_db; ///< nonempty, strictly increasing
    arma::uword n_trials = 100;
    std::vector<Method> methods;
    CovarianceModel covariance;
    PilotKind pilot = PilotKind::dft_truncated;
    CovarianceRedraw covariance_redraw = CovarianceRedraw::per_trial;
    std::uint64_t seed = 1;
    double tol = 1e-5;
    arma::uword max_iter = 200;

    void validate() const;
    SystemConfig system_config(double p_dl_linear) const;
};

/// Outcome of one (method, power, realization) cell. Wall time covers only
/// the precoder solve; channel generation and estimation are excluded.
struct TrialResult {
    Method method = Method::mmse;
    arma::uword trial = 0;
    double p_dl_db = 0.0;
    double sum_rate_lb = 0.0;  ///< bpcu; equals common_rate + sum(private_rates)
    double common_rate = 0.0;  ///< min over users, 0 when p_c = 0
    std::vector<double> private_rates;
    double sum_rate_genie = 0.0; ///< true-channel sum rate, reported separately
    std::vector<double> power_fractions; ///< K+1 entries, common first; sums to 1
    arma::uword iterations = 0;
    double wall_time_s = 0.0;
    StopReason converged_by = StopReason::closed_form;
};

struct TrialError {
    arma::uword trial = 0;
    double p_dl_db = 0.0;
    Method method = Method::mmse;
    std::string message;
};

struct TrialBatch {
    std::vector<TrialResult> results;
    std::vector<TrialError> errors;
};

/// Aggregates across trials. Indexing is [method][power] in the order the
/// spec lists them.
struct AggregateResult {
    std::vector<Method> methods;
    std::vector<double> powers_db;
    arma::uword n_trials = 0;
    CovarianceRedraw covariance_redraw_used = CovarianceRedraw::per_trial;

    arma::mat mean_sum_rate;       ///< methods x powers, bpcu
    arma::mat mean_sum_rate_genie; ///< methods x powers, true-channel metric

    /// Least-squares slope of mean sum rate vs log2(P_dl) over grid points at
    /// or above slope_window_db_min; absent when fewer than 3 such points.
    double slope_window_db_min = 30.0;
    std::vector<std::optional<double>> high_snr_slope;

    /// Mean power fraction per stream (common first), [method][power].
    std::vector<std::vector<std::vector<double>>> mean_power_fraction;

    /// CDF source samples, [method][power][successful trial].
    std::vector<std::vector<std::vector<arma::uword>>> iteration_samples;
    std::vector<std::vector<std::vector<double>>> wall_time_samples;
};

struct SweepOutput {
    AggregateResult aggregate;
    std::vector<TrialResult> raw; ///< ordered by (trial, power, method)
    std::vector<TrialError> errors;
};

/// Raised when more than 10% of the trials fail numerically at some grid
/// point; carries the diagnostics in what().
struct SweepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One channel realization: draws covariances and channels from seeds
/// derived from (spec.seed, trial_index), produces observations and LMMSE
/// estimates per power, and runs every requested method on the same
/// estimates. Numerical failures are recorded per cell, not thrown.
TrialBatch run_trial(const SweepSpec& spec, arma::uword trial_index);

/// Runs all trials (optionally on n_threads workers; 0 means hardware
/// concurrency) and aggregates. The result is deterministic for a fixed
/// spec regardless of thread count.
SweepOutput run_sweep(const SweepSpec& spec, unsigned n_threads = 1);

/// Number of private streams whose power fraction exceeds threshold.
/// power_fractions lists the common stream first.
arma::uword active_stream_count(const std::vector<double>& power_fractions,
                                double threshold);

} // namespace rsprec
