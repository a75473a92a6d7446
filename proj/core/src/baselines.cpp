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

#include "rsprec/baselines.hpp"

#include "rsprec/linalg.hpp"
#include "solver_detail.hpp"

#include <stdexcept>

namespace rsprec {

PrecoderSet mmse_precoder(const std::vector<ChannelEstimate>& estimates,
                          const SystemConfig& config) {
    if (estimates.empty())
        throw std::invalid_argument("mmse_precoder: estimates must be nonempty");

    const arma::uword m = estimates[0].h_hat.n_elem;
    const arma::uword k = estimates.size();

    arma::cx_mat h_stack(m, k);
    arma::cx_mat c_err_sum(m, m, arma::fill::zeros);
    for (arma::uword j = 0; j < k; ++j) {
        h_stack.col(j) = estimates[j].h_hat;
        c_err_sum += estimates[j].c_err;
    }

    const double eta = static_cast<double>(config.n_antennas) / config.power_dl;
    arma::cx_mat sys = hermitize(h_stack * h_stack.t() + c_err_sum);
    sys.diag() += eta;

    arma::cx_mat p_p = solve_hpd(sys, h_stack);
    const double fro = arma::norm(p_p, "fro");
    if (!(fro > 0.0))
        throw std::runtime_error("mmse_precoder: zero estimates produce a zero precoder");
    p_p /= fro;

    return PrecoderSet{arma::cx_vec(m, arma::fill::zeros), std::move(p_p)};
}

SolveResult awamse_no_rs(const SystemConfig& config,
                         const std::vector<ChannelEstimate>& estimates,
                         const PrecoderSet& p_init) {
    // Pin the common stream to zero; scaled filters/weights then produce
    // g_c = 0 and u_c = 1 exactly, so the shared loop degenerates as needed.
    PrecoderSet pinned{arma::cx_vec(p_init.n_antennas(), arma::fill::zeros), p_init.p_p};
    return detail::alternating_solve(config, estimates, pinned, false);
}

} // namespace rsprec
