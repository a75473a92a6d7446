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
#include <cstdint>
#include <random>

namespace rsprec {

/// All randomness flows through caller-owned engines; the library never
/// touches a global generator, so concurrent callers with separate engines
/// are safe.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic per-stream seed derivation, so parallel trials can draw
/// independent sequences in any execution order.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    return splitmix64(base + 0x9e3779b97f4a7c15ULL * (stream + 1ULL));
}

inline Rng make_rng(std::uint64_t seed) {
    return Rng(splitmix64(seed));
}

/// Circularly-symmetric complex Gaussian draws: real and imaginary parts are
/// each N(0, var/2).
arma::cx_vec randn_cn(arma::uword n, double var, Rng& rng);
arma::cx_mat randn_cn(arma::uword n_rows, arma::uword n_cols, double var, Rng& rng);

/// Draw h ~ CN(0, cov) for Hermitian PSD cov via eigenvalue factorization.
/// Small negative eigenvalues from roundoff are clamped to zero.
arma::cx_vec sample_cn(const arma::cx_mat& cov, Rng& rng);

} // namespace rsprec
