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

#include "rsprec/sim.hpp"

#include "rsprec/baselines.hpp"
#include "rsprec/bounds.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

namespace rsprec {

namespace {

// Seed stream tags: distinct randomness consumers never share a sequence.
constexpr std::uint64_t kStreamCovariance = 0x01;
constexpr std::uint64_t kStreamChannel = 0x02;
constexpr std::uint64_t kStreamPilot = 0x03;
constexpr std::uint64_t kStreamNoiseBase = 0x100; // + power index

double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

double log2_power(double db) {
    return db_to_linear(db) > 0.0 ? std::log2(db_to_linear(db)) : 0.0;
}

struct MethodOutcome {
    PrecoderSet precoder;
    arma::uword iterations = 0;
    StopReason converged_by = StopReason::closed_form;
};

/// The timed section: everything a method needs beyond the shared estimates.
MethodOutcome solve_method(Method method, const SweepSpec& spec, const SystemConfig& cfg,
                           const std::vector<ChannelEstimate>& estimates) {
    MethodOutcome out;
    switch (method) {
    case Method::mmse: {
        out.precoder = mmse_precoder(estimates, cfg);
        break;
    }
    case Method::awamse_rs: {
        const PrecoderSet pm = mmse_precoder(estimates, cfg);
        const PrecoderSet p0 = init_precoder(estimates, spec.alpha_c, pm);
        SolveResult r = run_awamse_rs(cfg, estimates, p0);
        out.precoder = std::move(r.precoder);
        out.iterations = r.trace.iterations;
        out.converged_by = r.trace.converged_by;
        break;
    }
    case Method::awamse_no_rs: {
        const PrecoderSet pm = mmse_precoder(estimates, cfg);
        const PrecoderSet p0 = init_precoder(estimates, 0.0, pm);
        SolveResult r = awamse_no_rs(cfg, estimates, p0);
        out.precoder = std::move(r.precoder);
        out.iterations = r.trace.iterations;
        out.converged_by = r.trace.converged_by;
        break;
    }
    }
    return out;
}

TrialResult evaluate(Method method, const SweepSpec& spec, const SystemConfig& cfg,
                     const std::vector<ChannelEstimate>& estimates,
                     const std::vector<arma::cx_vec>& channels, arma::uword trial,
                     double p_dl_db) {
    const arma::vec sigma2(spec.k, arma::fill::value(cfg.noise_var()));

    const auto t0 = std::chrono::steady_clock::now();
    MethodOutcome solved = solve_method(method, spec, cfg, estimates);
    const auto t1 = std::chrono::steady_clock::now();

    const PrecoderSet& p = solved.precoder;
    const CommonPrivate rates = rate_lower_bounds(link_statistics(estimates, p, sigma2));

    TrialResult res;
    res.method = method;
    res.trial = trial;
    res.p_dl_db = p_dl_db;
    res.common_rate = rates.common.min();
    res.private_rates.assign(rates.priv.begin(), rates.priv.end());
    res.sum_rate_lb = res.common_rate + arma::accu(rates.priv);
    res.sum_rate_genie = sum_rate_true(channels, p, sigma2);

    res.power_fractions.reserve(spec.k + 1);
    res.power_fractions.push_back(arma::accu(arma::square(arma::abs(p.p_c))));
    for (arma::uword j = 0; j < spec.k; ++j)
        res.power_fractions.push_back(arma::accu(arma::square(arma::abs(p.p_p.col(j)))));

    res.iterations = solved.iterations;
    res.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    res.converged_by = solved.converged_by;
    return res;
}

std::optional<double> fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 3)
        return std::nullopt;
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0)
        return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

} // namespace

std::string method_id(Method m) {
    switch (m) {
    case Method::awamse_rs: return "awamse-rs";
    case Method::awamse_no_rs: return "awamse-nors";
    case Method::mmse: return "mmse";
    }
    return "unknown";
}

std::optional<Method> method_from_id(std::string_view id) {
    if (id == "awamse-rs")
        return Method::awamse_rs;
    if (id == "awamse-nors")
        return Method::awamse_no_rs;
    if (id == "mmse")
        return Method::mmse;
    return std::nullopt;
}

void SweepSpec::validate() const {
    system_config(1.0).validate();
    if (!(alpha_c >= 0.0 && alpha_c <= 1.0))
        throw std::invalid_argument("SweepSpec: alpha_c must lie in [0, 1]");
    if (powers_db.empty())
        throw std::invalid_argument("SweepSpec: powers_db must be nonempty");
    for (std::size_t i = 1; i < powers_db.size(); ++i)
        if (!(powers_db[i] > powers_db[i - 1]))
            throw std::invalid_argument("SweepSpec: powers_db must be strictly increasing");
    if (n_trials < 1)
        throw std::invalid_argument("SweepSpec: n_trials must be positive");
    if (methods.empty())
        throw std::invalid_argument("SweepSpec: methods must be nonempty");
    if (covariance.kind == CovarianceKind::exponential &&
        !(covariance.rho >= 0.0 && covariance.rho < 1.0))
        throw std::invalid_argument("SweepSpec: covariance rho must lie in [0, 1)");
    if (covariance.kind == CovarianceKind::rank_limited) {
        if (covariance.rank < 1 || covariance.rank > m)
            throw std::invalid_argument("SweepSpec: covariance rank must lie in 1..m");
        if (!(covariance.decay > 0.0 && covariance.decay <= 1.0))
            throw std::invalid_argument("SweepSpec: covariance decay must lie in (0, 1]");
    }
}

SystemConfig SweepSpec::system_config(double p_dl_linear) const {
    SystemConfig cfg;
    cfg.n_antennas = m;
    cfg.n_users = k;
    cfg.n_pilots = t_dl;
    cfg.power_dl = p_dl_linear;
    cfg.alpha_c = alpha_c;
    cfg.seed = seed;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    return cfg;
}

TrialBatch run_trial(const SweepSpec& spec, arma::uword trial_index) {
    spec.validate();
    TrialBatch batch;

    const std::uint64_t trial_seed = derive_seed(spec.seed, trial_index);

    // Covariances: fresh per trial, or one shared draw for all trials.
    const std::uint64_t cov_seed = spec.covariance_redraw == CovarianceRedraw::per_trial
                                       ? derive_seed(trial_seed, kStreamCovariance)
                                       : derive_seed(spec.seed, kStreamCovariance);
    Rng cov_rng = make_rng(cov_seed);
    std::vector<arma::cx_mat> covs;
    covs.reserve(spec.k);
    for (arma::uword u = 0; u < spec.k; ++u)
        covs.push_back(synth_covariance(spec.m, spec.covariance, cov_rng));

    Rng chan_rng = make_rng(derive_seed(trial_seed, kStreamChannel));
    std::vector<arma::cx_vec> channels;
    channels.reserve(spec.k);
    for (arma::uword u = 0; u < spec.k; ++u)
        channels.push_back(sample_cn(covs[u], chan_rng));

    // One pilot matrix per system; the random-unitary kind is tied to the
    // sweep seed so every trial trains on the same pilots.
    Rng pilot_rng = make_rng(derive_seed(spec.seed, kStreamPilot));
    const PilotMatrix pilot = make_pilot_matrix(spec.m, spec.t_dl, spec.pilot, pilot_rng);

    for (std::size_t pi = 0; pi < spec.powers_db.size(); ++pi) {
        const double p_db = spec.powers_db[pi];
        const double p_lin = db_to_linear(p_db);
        const SystemConfig cfg = spec.system_config(p_lin);
        const double sigma2 = cfg.noise_var();

        std::vector<ChannelEstimate> estimates;
        bool estimated = false;
        std::string estimation_error;
        try {
            Rng noise_rng = make_rng(derive_seed(trial_seed, kStreamNoiseBase + pi));
            estimates.reserve(spec.k);
            for (arma::uword u = 0; u < spec.k; ++u) {
                const arma::cx_vec y = observe(pilot, channels[u], sigma2, noise_rng);
                estimates.push_back(lmmse_estimate(covs[u], pilot, sigma2, y));
            }
            estimated = true;
        } catch (const std::exception& e) {
            estimation_error = e.what();
        }

        for (Method method : spec.methods) {
            if (!estimated) {
                batch.errors.push_back({trial_index, p_db, method, estimation_error});
                continue;
            }
            try {
                batch.results.push_back(
                    evaluate(method, spec, cfg, estimates, channels, trial_index, p_db));
            } catch (const std::exception& e) {
                batch.errors.push_back({trial_index, p_db, method, e.what()});
            }
        }
    }
    return batch;
}

SweepOutput run_sweep(const SweepSpec& spec, unsigned n_threads) {
    spec.validate();

    if (n_threads == 0)
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, spec.n_trials);

    std::vector<TrialBatch> batches(spec.n_trials);
    std::atomic<arma::uword> next{0};
    auto worker = [&] {
        for (arma::uword t = next.fetch_add(1); t < spec.n_trials; t = next.fetch_add(1)) {
            try {
                batches[t] = run_trial(spec, t);
            } catch (const std::exception& e) {
                // Whole-trial failure: mark every cell of this trial.
                TrialBatch failed;
                for (double p_db : spec.powers_db)
                    for (Method method : spec.methods)
                        failed.errors.push_back({t, p_db, method, e.what()});
                batches[t] = std::move(failed);
            }
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // Ordered reduction: trial-major, then power, then method.
    SweepOutput out;
    for (auto& b : batches) {
        out.raw.insert(out.raw.end(), b.results.begin(), b.results.end());
        out.errors.insert(out.errors.end(), b.errors.begin(), b.errors.end());
    }

    const std::size_t n_methods = spec.methods.size();
    const std::size_t n_powers = spec.powers_db.size();
    auto method_index = [&](Method m) {
        for (std::size_t i = 0; i < n_methods; ++i)
            if (spec.methods[i] == m)
                return i;
        return n_methods;
    };
    auto power_index = [&](double db) {
        for (std::size_t i = 0; i < n_powers; ++i)
            if (spec.powers_db[i] == db)
                return i;
        return n_powers;
    };

    // Abort when any grid point lost more than 10% of its trials.
    std::vector<std::vector<arma::uword>> failures(n_powers,
                                                   std::vector<arma::uword>(n_methods, 0));
    for (const TrialError& e : out.errors)
        ++failures[power_index(e.p_dl_db)][method_index(e.method)];
    const double limit = 0.1 * static_cast<double>(spec.n_trials);
    for (std::size_t pi = 0; pi < n_powers; ++pi) {
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
            if (static_cast<double>(failures[pi][mi]) > limit) {
                std::ostringstream msg;
                msg << "run_sweep: " << failures[pi][mi] << "/" << spec.n_trials
                    << " trials failed for method " << method_id(spec.methods[mi])
                    << " at " << spec.powers_db[pi] << " dB; first error: ";
                for (const TrialError& e : out.errors) {
                    if (power_index(e.p_dl_db) == pi && method_index(e.method) == mi) {
                        msg << e.message;
                        break;
                    }
                }
                throw SweepError(msg.str());
            }
        }
    }

    AggregateResult& agg = out.aggregate;
    agg.methods = spec.methods;
    agg.powers_db = spec.powers_db;
    agg.n_trials = spec.n_trials;
    agg.covariance_redraw_used = spec.covariance_redraw;
    agg.mean_sum_rate.zeros(n_methods, n_powers);
    agg.mean_sum_rate_genie.zeros(n_methods, n_powers);
    agg.mean_power_fraction.assign(
        n_methods, std::vector<std::vector<double>>(
                       n_powers, std::vector<double>(spec.k + 1, 0.0)));
    agg.iteration_samples.assign(n_methods,
                                 std::vector<std::vector<arma::uword>>(n_powers));
    agg.wall_time_samples.assign(n_methods, std::vector<std::vector<double>>(n_powers));

    arma::umat counts(n_methods, n_powers, arma::fill::zeros);
    for (const TrialResult& r : out.raw) {
        const std::size_t mi = method_index(r.method);
        const std::size_t pi = power_index(r.p_dl_db);
        agg.mean_sum_rate(mi, pi) += r.sum_rate_lb;
        agg.mean_sum_rate_genie(mi, pi) += r.sum_rate_genie;
        for (std::size_t s = 0; s < r.power_fractions.size(); ++s)
            agg.mean_power_fraction[mi][pi][s] += r.power_fractions[s];
        agg.iteration_samples[mi][pi].push_back(r.iterations);
        agg.wall_time_samples[mi][pi].push_back(r.wall_time_s);
        ++counts(mi, pi);
    }
    for (std::size_t mi = 0; mi < n_methods; ++mi) {
        for (std::size_t pi = 0; pi < n_powers; ++pi) {
            const double n = static_cast<double>(counts(mi, pi));
            if (n > 0.0) {
                agg.mean_sum_rate(mi, pi) /= n;
                agg.mean_sum_rate_genie(mi, pi) /= n;
                for (double& f : agg.mean_power_fraction[mi][pi])
                    f /= n;
            }
        }
    }

    agg.high_snr_slope.assign(n_methods, std::nullopt);
    std::vector<double> window_x;
    std::vector<std::size_t> window_pi;
    for (std::size_t pi = 0; pi < n_powers; ++pi) {
        if (spec.powers_db[pi] >= agg.slope_window_db_min) {
            window_x.push_back(log2_power(spec.powers_db[pi]));
            window_pi.push_back(pi);
        }
    }
    for (std::size_t mi = 0; mi < n_methods; ++mi) {
        std::vector<double> y;
        y.reserve(window_pi.size());
        for (std::size_t pi : window_pi)
            y.push_back(agg.mean_sum_rate(mi, pi));
        agg.high_snr_slope[mi] = fit_slope(window_x, y);
    }

    return out;
}

arma::uword active_stream_count(const std::vector<double>& power_fractions,
                                double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("active_stream_count: threshold must lie in (0, 1)");
    if (power_fractions.empty())
        throw std::invalid_argument("active_stream_count: empty power fractions");
    arma::uword n = 0;
    for (std::size_t i = 1; i < power_fractions.size(); ++i) // skip the common entry
        if (power_fractions[i] > threshold)
            ++n;
    return n;
}

} // namespace rsprec
