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

#include "rsprec/linalg.hpp"

#include <stdexcept>

namespace rsprec {

arma::cx_mat hermitize(const arma::cx_mat& a) {
    return 0.5 * (a + a.t());
}

arma::cx_mat solve_hpd(const arma::cx_mat& lhs, const arma::cx_mat& rhs) {
    if (lhs.n_rows != lhs.n_cols || lhs.n_rows != rhs.n_rows)
        throw std::invalid_argument("solve_hpd: dimension mismatch");

    const double jitter =
        1e-12 * std::abs(std::real(arma::trace(lhs))) / static_cast<double>(lhs.n_rows);

    arma::cx_mat h = lhs;
    if (arma::rcond(h) < 1e-14)
        h.diag() += jitter;

    const auto opts = arma::solve_opts::likely_sympd + arma::solve_opts::no_approx;
    arma::cx_mat x;
    if (arma::solve(x, h, rhs, opts))
        return x;
    h.diag() += jitter;
    if (arma::solve(x, h, rhs, opts))
        return x;
    throw std::runtime_error("solve_hpd: Hermitian system is singular after jitter retry");
}

} // namespace rsprec
