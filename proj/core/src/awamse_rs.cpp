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

#include "rsprec/awamse_rs.hpp"

#include "rsprec/bounds.hpp"
#include "rsprec/linalg.hpp"
#include "solver_detail.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace rsprec {

namespace {

double sqabs(std::complex<double> z) {
    return std::norm(z);
}

} // namespace

const char* to_string(StopReason reason) {
    switch (reason) {
    case StopReason::tolerance: return "tolerance";
    case StopReason::no_improvement: return "no-improvement";
    case StopReason::max_iter: return "max-iter";
    case StopReason::closed_form: return "closed-form";
    }
    return "unknown";
}

ReceiveFilters scaled_filters(const std::vector<ChannelEstimate>& estimates,
                              const PrecoderSet& p, const arma::vec& sigma2) {
    const double pw = p.power();
    if (!(pw > 0.0))
        throw std::invalid_argument("scaled_filters: precoder must be nonzero");

    const arma::uword k = estimates.size();
    const LinkStatistics s = link_statistics(estimates, p, sigma2);

    ReceiveFilters f{arma::cx_vec(k), arma::cx_vec(k)};
    for (arma::uword i = 0; i < k; ++i) {
        const arma::cx_vec& hh = estimates[i].h_hat;
        f.common(i) = std::conj(arma::cdot(hh, p.p_c)) / (s.t_c(i) + sigma2(i) * pw);
        f.priv(i) = std::conj(arma::cdot(hh, p.p_p.col(i))) / (s.t_p(i) + sigma2(i) * pw);
    }
    return f;
}

MseWeights scaled_weights(const std::vector<ChannelEstimate>& estimates,
                          const PrecoderSet& p, const arma::vec& sigma2) {
    const double pw = p.power();
    if (!(pw > 0.0))
        throw std::invalid_argument("scaled_weights: precoder must be nonzero");

    const arma::uword k = estimates.size();
    const LinkStatistics s = link_statistics(estimates, p, sigma2);

    MseWeights w{arma::vec(k), arma::vec(k)};
    for (arma::uword i = 0; i < k; ++i) {
        const arma::cx_vec& hh = estimates[i].h_hat;
        const double sig_c = sqabs(arma::cdot(hh, p.p_c));
        const double sig_p = sqabs(arma::cdot(hh, p.p_p.col(i)));
        w.common(i) = 1.0 / (1.0 - sig_c / (s.t_c(i) + sigma2(i) * pw));
        w.priv(i) = 1.0 / (1.0 - sig_p / (s.t_p(i) + sigma2(i) * pw));
    }
    return w;
}

CandidateSystemMatrices candidate_matrices(arma::uword k_c,
                                           const std::vector<ChannelEstimate>& estimates,
                                           const FilterWeightState& state,
                                           const arma::vec& sigma2) {
    const arma::uword k = estimates.size();
    if (k_c >= k)
        throw std::invalid_argument("candidate_matrices: user index out of range");
    const arma::uword m = estimates[k_c].h_hat.n_elem;

    bool any_filter = sqabs(state.g_c(k_c)) > 0.0;
    for (arma::uword i = 0; i < k && !any_filter; ++i)
        any_filter = sqabs(state.g_p(i)) > 0.0;
    if (!any_filter)
        throw std::runtime_error(
            "candidate_matrices: all receive filters are zero, system is singular");

    CandidateSystemMatrices out;

    const arma::cx_vec& hc = estimates[k_c].h_hat;
    const double wc = state.u_c(k_c) * sqabs(state.g_c(k_c));
    out.a = wc * (hc * hc.t() + estimates[k_c].c_err);
    out.a.diag() += wc * sigma2(k_c);

    double b_diag = 0.0;
    out.c.zeros(m, m);
    for (arma::uword i = 0; i < k; ++i) {
        const double wp = state.u_p(i) * sqabs(state.g_p(i));
        b_diag += wp * sigma2(i);
        if (wp > 0.0) {
            const arma::cx_vec& hi = estimates[i].h_hat;
            out.c += wp * (hi * hi.t() + estimates[i].c_err);
        }
    }
    out.b = arma::cx_mat(b_diag * arma::eye(m, m), arma::zeros(m, m));

    out.a = hermitize(out.a);
    out.c = hermitize(out.c);
    return out;
}

PrecoderSet precoder_candidate(arma::uword k_c,
                               const std::vector<ChannelEstimate>& estimates,
                               const FilterWeightState& state, const arma::vec& sigma2) {
    const arma::uword k = estimates.size();
    const CandidateSystemMatrices mats = candidate_matrices(k_c, estimates, state, sigma2);
    const arma::uword m = mats.a.n_rows;

    const arma::cx_mat ab = mats.a + mats.b;
    const arma::cx_vec rhs_c =
        state.u_c(k_c) * std::conj(state.g_c(k_c)) * estimates[k_c].h_hat;

    arma::cx_mat rhs_p(m, k);
    for (arma::uword j = 0; j < k; ++j)
        rhs_p.col(j) = state.u_p(j) * std::conj(state.g_p(j)) * estimates[j].h_hat;

    PrecoderSet p;
    p.p_c = solve_hpd(ab, rhs_c);
    p.p_p = solve_hpd(ab + mats.c, rhs_p);
    return p;
}

double total_objective(const std::vector<ChannelEstimate>& estimates, const PrecoderSet& p,
                       const FilterWeightState& state, const arma::vec& sigma2) {
    const arma::uword k = estimates.size();
    const double pw = p.power();
    const LinkStatistics s = link_statistics(estimates, p, sigma2);

    double sum_priv = 0.0;
    double max_common = -arma::datum::inf;
    for (arma::uword i = 0; i < k; ++i) {
        const arma::cx_vec& hh = estimates[i].h_hat;
        const double noise = sigma2(i) * pw;

        const double eps_c = 1.0 - 2.0 * std::real(state.g_c(i) * arma::cdot(hh, p.p_c)) +
                             sqabs(state.g_c(i)) * (noise + s.t_c(i));
        const double eps_p =
            1.0 - 2.0 * std::real(state.g_p(i) * arma::cdot(hh, p.p_p.col(i))) +
            sqabs(state.g_p(i)) * (noise + s.t_p(i));

        max_common = std::max(max_common,
                              state.u_c(i) * eps_c - std::log2(state.u_c(i)));
        sum_priv += state.u_p(i) * eps_p - std::log2(state.u_p(i));
    }
    return sum_priv + max_common;
}

namespace detail {

SolveResult alternating_solve(const SystemConfig& config,
                              const std::vector<ChannelEstimate>& estimates,
                              const PrecoderSet& p_init, bool rate_splitting) {
    config.validate();
    if (estimates.size() != config.n_users)
        throw std::invalid_argument("alternating_solve: estimate count != n_users");

    const double p0 = p_init.power();
    if (!(p0 > 0.0))
        throw std::invalid_argument("alternating_solve: initial precoder must be nonzero");
    if (p0 > 1.0 + 1e-9)
        throw std::invalid_argument(
            "alternating_solve: initial precoder must satisfy the unit power constraint");

    const arma::uword k = config.n_users;
    const arma::vec sigma2(k, arma::fill::value(config.noise_var()));
    // The disabled common term contributes exactly 1 to the full objective.
    const double offset = rate_splitting ? 0.0 : 1.0;

    PrecoderSet p = p_init;
    SolveTrace trace;
    trace.converged_by = StopReason::max_iter;

    double xi_min = std::numeric_limits<double>::infinity();
    for (arma::uword n = 1; n <= config.max_iter; ++n) {
        const ReceiveFilters f = scaled_filters(estimates, p, sigma2);
        const MseWeights w = scaled_weights(estimates, p, sigma2);
        const FilterWeightState state{f.common, f.priv, w.common, w.priv};

        const double xi_pre = total_objective(estimates, p, state, sigma2) - offset;
        if (!std::isfinite(xi_pre))
            throw std::runtime_error("alternating_solve: objective became non-finite at iteration " +
                                     std::to_string(n));
        if (n == 1)
            xi_min = xi_pre; // candidates must improve on the initialization

        double best_xi = std::numeric_limits<double>::infinity();
        arma::uword best_k = 0;
        PrecoderSet best_p;
        const arma::uword n_candidates = rate_splitting ? k : 1;
        for (arma::uword kc = 0; kc < n_candidates; ++kc) {
            PrecoderSet cand = precoder_candidate(kc, estimates, state, sigma2);
            const double xi = total_objective(estimates, cand, state, sigma2) - offset;
            if (!std::isfinite(xi))
                throw std::runtime_error(
                    "alternating_solve: candidate objective became non-finite at iteration " +
                    std::to_string(n));
            if (xi < best_xi) { // ties keep the smallest user index
                best_xi = xi;
                best_k = kc;
                best_p = std::move(cand);
            }
        }

        if (best_xi > xi_min) {
            trace.converged_by = StopReason::no_improvement;
            break; // p still holds the previous accepted precoder
        }

        const double delta = xi_min - best_xi;
        p = std::move(best_p);
        xi_min = best_xi;
        trace.objective_per_iter.push_back(xi_min);
        trace.objective_pre_update.push_back(xi_pre);
        trace.k_min_per_iter.push_back(best_k);
        trace.iterations = n;

        if (delta < config.tol) {
            trace.converged_by = StopReason::tolerance;
            break;
        }
    }

    return SolveResult{p.normalized(), std::move(trace)};
}

} // namespace detail

SolveResult run_awamse_rs(const SystemConfig& config,
                          const std::vector<ChannelEstimate>& estimates,
                          const PrecoderSet& p_init) {
    return detail::alternating_solve(config, estimates, p_init, true);
}

PrecoderSet init_precoder(const std::vector<ChannelEstimate>& estimates, double alpha_c,
                          const PrecoderSet& p_mmse) {
    if (!(alpha_c >= 0.0 && alpha_c <= 1.0))
        throw std::invalid_argument("init_precoder: alpha_c must lie in [0, 1]");
    if (estimates.empty())
        throw std::invalid_argument("init_precoder: estimates must be nonempty");

    const double mmse_norm = std::sqrt(p_mmse.power());
    if (!(mmse_norm > 0.0))
        throw std::invalid_argument("init_precoder: MMSE precoder must be nonzero");

    const arma::uword m = estimates[0].h_hat.n_elem;
    const arma::uword k = estimates.size();
    arma::cx_mat h_stack(m, k);
    for (arma::uword j = 0; j < k; ++j)
        h_stack.col(j) = estimates[j].h_hat;

    arma::cx_mat u, v;
    arma::vec sv;
    if (!arma::svd_econ(u, sv, v, h_stack))
        throw std::runtime_error("init_precoder: SVD failed");
    if (sv.n_elem == 0 || !(sv(0) > 0.0))
        throw std::invalid_argument("init_precoder: estimates are all zero");

    PrecoderSet p;
    p.p_c = alpha_c * u.col(0);
    p.p_p = (1.0 - alpha_c) / mmse_norm * p_mmse.p_p;

    // alpha_c^2 + (1-alpha_c)^2 <= 1 already; guard against roundoff only.
    const double pw = p.power();
    if (pw > 1.0) {
        const double s = 1.0 / std::sqrt(pw);
        p.p_c *= s;
        p.p_p *= s;
    }
    return p;
}

} // namespace rsprec
