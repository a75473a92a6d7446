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

namespace rsprec::detail {

/// Shared alternating loop. With rate_splitting the candidate search runs
/// over all common-user indices and the objective is the full AWAMSE sum;
/// without it the common stream stays at zero, the single private update is
/// used, and the recorded objective is the private sum only (the disabled
/// common term contributes an exact constant that is subtracted).
SolveResult alternating_solve(const SystemConfig& config,
                              const std::vector<ChannelEstimate>& estimates,
                              const PrecoderSet& p_init, bool rate_splitting);

} // namespace rsprec::detail
