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

#include "rsprec/types.hpp"

#include <cmath>
#include <stdexcept>

namespace rsprec {

void SystemConfig::validate() const {
    if (n_antennas < 1)
        throw std::invalid_argument("SystemConfig: n_antennas must be positive");
    if (n_users < 1)
        throw std::invalid_argument("SystemConfig: n_users must be positive");
    if (n_pilots < 1 || n_pilots > n_antennas)
        throw std::invalid_argument("SystemConfig: n_pilots must lie in 1..n_antennas");
    if (!(power_dl > 0.0))
        throw std::invalid_argument("SystemConfig: power_dl must be positive");
    if (!(alpha_c >= 0.0 && alpha_c <= 1.0))
        throw std::invalid_argument("SystemConfig: alpha_c must lie in [0, 1]");
    if (!(tol > 0.0))
        throw std::invalid_argument("SystemConfig: tol must be positive");
}

double PrecoderSet::power() const {
    const double common = arma::accu(arma::square(arma::abs(p_c)));
    const double priv = arma::accu(arma::square(arma::abs(p_p)));
    return common + priv;
}

PrecoderSet PrecoderSet::normalized() const {
    const double pw = power();
    if (!(pw > 0.0))
        throw std::invalid_argument("PrecoderSet: cannot normalize a zero precoder");
    const double s = 1.0 / std::sqrt(pw);
    return PrecoderSet{p_c * s, p_p * s};
}

} // namespace rsprec
