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

#include <armadillo>

namespace rsprec {

/// 0.5 (A + A^H); removes the skew part accumulated by roundoff.
arma::cx_mat hermitize(const arma::cx_mat& a);

/// Solve H X = B for Hermitian positive (semi)definite H. If the system is
/// ill conditioned (rcond < 1e-14) a diagonal jitter of 1e-12 tr(H)/n is
/// added before the solve, and once more if the solve still fails;
/// persistent failure throws std::runtime_error.
arma::cx_mat solve_hpd(const arma::cx_mat& lhs, const arma::cx_mat& rhs);

} // namespace rsprec
