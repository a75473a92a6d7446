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

#include <ostream>

namespace rsprec {

/// Quick oracle and invariant battery (a few seconds): hand-computed LMMSE
/// and SINR cases, the rate/AWAMSE identities, solver descent and power
/// feasibility, and trial determinism. Prints one line per check; returns
/// true iff everything passed.
bool run_selftest(std::ostream& out);

} // namespace rsprec
