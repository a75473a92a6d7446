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
#include "rsprec/types.hpp"

#include <vector>

namespace rsprec {

/// Regularized MMSE precoder
///   P_p = delta (H H^H + sum_k C_err,k + (M/P_dl) I)^-1 H
/// with delta chosen so ||P_p||_F = 1 and no common stream. Deterministic.
PrecoderSet mmse_precoder(const std::vector<ChannelEstimate>& estimates,
                          const SystemConfig& config);

/// The alternating solver with the common stream disabled: p_c pinned to 0,
/// g_c = 0, u_c = 1, no common-user search, and the objective reduced to the
/// sum of private AWAMSE terms. Any common component of p_init is dropped.
SolveResult awamse_no_rs(const SystemConfig& config,
                         const std::vector<ChannelEstimate>& estimates,
                         const PrecoderSet& p_init);

} // namespace rsprec
