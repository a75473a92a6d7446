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

#include "rsprec/selftest.hpp"

#include "rsprec/baselines.hpp"
#include "rsprec/bounds.hpp"
#include "rsprec/channel.hpp"
#include "rsprec/linalg.hpp"
#include "rsprec/sim.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace rsprec {

namespace {

std::vector<ChannelEstimate> random_estimates(arma::uword m, arma::uword k, Rng& rng) {
    std::vector<ChannelEstimate> est;
    est.reserve(k);
    for (arma::uword i = 0; i < k; ++i) {
        ChannelEstimate e;
        e.h_hat = randn_cn(m, 1.0, rng);
        const arma::cx_mat g = randn_cn(m, m, 1.0, rng);
        e.c_err = hermitize(g * g.t() / static_cast<double>(m));
        est.push_back(std::move(e));
    }
    return est;
}

PrecoderSet random_precoder(arma::uword m, arma::uword k, Rng& rng) {
    PrecoderSet p{randn_cn(m, 1.0, rng), randn_cn(m, k, 1.0, rng)};
    return p.normalized();
}

bool check_identities(arma::uword n_instances) {
    Rng rng = make_rng(0x5e1f);
    for (arma::uword it = 0; it < n_instances; ++it) {
        const arma::uword m = 2 + (rng() % 7);
        const arma::uword k = 1 + (rng() % 4);
        const auto est = random_estimates(m, k, rng);
        const PrecoderSet p = random_precoder(m, k, rng);
        const arma::vec sigma2(k, arma::fill::value(0.1 + 0.9 * (rng() % 10) / 10.0));

        const CommonPrivate rates = rate_lower_bounds(link_statistics(est, p, sigma2));
        const ReceiveFilters f = mmse_filters(est, p, sigma2);
        FilterWeightState state{f.common, f.priv, arma::vec(k, arma::fill::ones),
                                arma::vec(k, arma::fill::ones)};
        const CommonPrivate mse = average_mse(est, p, state, sigma2);
        const MseWeights w = optimal_weights(mse.common, mse.priv);
        state.u_c = w.common;
        state.u_p = w.priv;
        const CommonPrivate xi = awamse(state, mse);

        for (arma::uword i = 0; i < k; ++i) {
            if (std::abs(-std::log2(mse.common(i)) - rates.common(i)) > 1e-10)
                return false;
            if (std::abs(-std::log2(mse.priv(i)) - rates.priv(i)) > 1e-10)
                return false;
            if (std::abs(xi.common(i) - (1.0 - rates.common(i))) > 1e-10)
                return false;
            if (std::abs(xi.priv(i) - (1.0 - rates.priv(i))) > 1e-10)
                return false;
        }
    }
    return true;
}

bool check_lmmse_oracle() {
    // M=2, T=1, C=I, Phi=e1, sigma2=1: h_hat = [y/2, 0], C_err = diag(1/2, 1).
    const arma::cx_mat cov(arma::eye(2, 2), arma::zeros(2, 2));
    PilotMatrix pilot;
    pilot.phi = arma::cx_mat(arma::mat{{1.0}, {0.0}}, arma::zeros(2, 1));
    const arma::cx_vec y{std::complex<double>(0.8, -0.4)};
    const ChannelEstimate est = lmmse_estimate(cov, pilot, 1.0, y);

    if (std::abs(est.h_hat(0) - y(0) / 2.0) > 1e-12 || std::abs(est.h_hat(1)) > 1e-12)
        return false;
    const arma::cx_mat expected(arma::mat{{0.5, 0.0}, {0.0, 1.0}}, arma::zeros(2, 2));
    return arma::norm(arma::abs(est.c_err - expected), "inf") <= 1e-12;
}

bool check_scalar_bounds() {
    // Scalar case: h_hat=1, C_err=0.5, p_c=p_p=1, sigma2=1.
    std::vector<ChannelEstimate> est(1);
    est[0].h_hat = arma::cx_vec{std::complex<double>(1.0, 0.0)};
    est[0].c_err = arma::cx_mat(arma::mat{{0.5}}, arma::zeros(1, 1));
    PrecoderSet p{arma::cx_vec{std::complex<double>(1.0, 0.0)},
                  arma::cx_mat(arma::mat{{1.0}}, arma::zeros(1, 1))};
    const arma::vec sigma2{1.0};

    const LinkStatistics s = link_statistics(est, p, sigma2);
    if (std::abs(s.gamma_c(0) - 1.0 / 3.0) > 1e-12) return false;
    if (std::abs(s.gamma_p(0) - 2.0 / 3.0) > 1e-12) return false;

    const ReceiveFilters f = mmse_filters(est, p, sigma2);
    if (std::abs(f.common(0) - 0.25) > 1e-12) return false;
    if (std::abs(f.priv(0) - 0.4) > 1e-12) return false;

    FilterWeightState state{f.common, f.priv, arma::vec{1.0}, arma::vec{1.0}};
    const CommonPrivate mse = average_mse(est, p, state, sigma2);
    return std::abs(mse.common(0) - 0.75) <= 1e-12;
}

bool check_descent() {
    Rng rng = make_rng(0xdecade);
    for (int run = 0; run < 20; ++run) {
        SweepSpec spec;
        spec.m = 4;
        spec.k = 3;
        spec.t_dl = 2;
        spec.powers_db = {20.0};
        spec.n_trials = 1;
        spec.methods = {Method::awamse_rs, Method::awamse_no_rs};
        spec.covariance = CovarianceModel::exponential(0.6);
        spec.seed = rng();

        SystemConfig cfg = spec.system_config(100.0);
        Rng inst = make_rng(spec.seed);
        std::vector<ChannelEstimate> est;
        Rng pilot_rng = make_rng(derive_seed(spec.seed, 3));
        const PilotMatrix pilot = make_pilot_matrix(spec.m, spec.t_dl, spec.pilot, pilot_rng);
        for (arma::uword u = 0; u < spec.k; ++u) {
            const arma::cx_mat cov = synth_covariance(spec.m, spec.covariance, inst);
            const arma::cx_vec h = sample_cn(cov, inst);
            const arma::cx_vec y = observe(pilot, h, cfg.noise_var(), inst);
            est.push_back(lmmse_estimate(cov, pilot, cfg.noise_var(), y));
        }

        const PrecoderSet pm = mmse_precoder(est, cfg);
        const SolveResult r = run_awamse_rs(cfg, est, init_precoder(est, 0.5, pm));
        for (std::size_t i = 1; i < r.trace.objective_per_iter.size(); ++i)
            if (r.trace.objective_per_iter[i] > r.trace.objective_per_iter[i - 1])
                return false;
        if (std::abs(r.precoder.power() - 1.0) > 1e-9)
            return false;
    }
    return true;
}

bool check_determinism() {
    SweepSpec spec;
    spec.m = 4;
    spec.k = 2;
    spec.t_dl = 2;
    spec.powers_db = {0.0, 20.0};
    spec.n_trials = 2;
    spec.methods = {Method::awamse_rs, Method::mmse};
    spec.covariance = CovarianceModel::rank_limited(2);
    spec.seed = 7;

    const TrialBatch a = run_trial(spec, 0);
    const TrialBatch b = run_trial(spec, 0);
    if (a.results.size() != b.results.size())
        return false;
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        if (a.results[i].sum_rate_lb != b.results[i].sum_rate_lb)
            return false;
        if (a.results[i].power_fractions != b.results[i].power_fractions)
            return false;
        if (a.results[i].iterations != b.results[i].iterations)
            return false;
    }
    return true;
}

} // namespace

bool run_selftest(std::ostream& out) {
    struct Check {
        const char* name;
        std::function<bool()> fn;
    };
    const std::vector<Check> checks = {
        {"lmmse-hand-computed-2x2", check_lmmse_oracle},
        {"scalar-sinr-filter-mse-oracles", check_scalar_bounds},
        {"rate-awamse-identities-100x", [] { return check_identities(100); }},
        {"solver-descent-and-unit-power", check_descent},
        {"trial-determinism", check_determinism},
    };

    bool all_ok = true;
    for (const Check& c : checks) {
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            out << "[FAIL] " << c.name << " (exception: " << e.what() << ")\n";
            all_ok = false;
            continue;
        }
        out << (ok ? "[ ok ] " : "[FAIL] ") << c.name << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok;
}

} // namespace rsprec
