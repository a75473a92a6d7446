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

#include "rsprec/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rsprec {

arma::cx_vec randn_cn(arma::uword n, double var, Rng& rng) {
    if (!(var >= 0.0))
        throw std::invalid_argument("randn_cn: variance must be nonnegative");
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * var));
    arma::cx_vec out(n);
    for (arma::uword i = 0; i < n; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        out(i) = std::complex<double>(re, im);
    }
    return out;
}

arma::cx_mat randn_cn(arma::uword n_rows, arma::uword n_cols, double var, Rng& rng) {
    if (!(var >= 0.0))
        throw std::invalid_argument("randn_cn: variance must be nonnegative");
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * var));
    arma::cx_mat out(n_rows, n_cols);
    for (arma::uword j = 0; j < n_cols; ++j) {
        for (arma::uword i = 0; i < n_rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            out(i, j) = std::complex<double>(re, im);
        }
    }
    return out;
}

arma::cx_vec sample_cn(const arma::cx_mat& cov, Rng& rng) {
    if (cov.n_rows != cov.n_cols)
        throw std::invalid_argument("sample_cn: covariance must be square");
    arma::vec eigval;
    arma::cx_mat eigvec;
    if (!arma::eig_sym(eigval, eigvec, cov))
        throw std::runtime_error("sample_cn: eigendecomposition failed");
    eigval.transform([](double v) { return v > 0.0 ? v : 0.0; });
    const arma::cx_vec w = randn_cn(cov.n_rows, 1.0, rng);
    return eigvec * (arma::conv_to<arma::cx_vec>::from(arma::sqrt(eigval)) % w);
}

} // namespace rsprec
