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

#include "rsprec/run_config.hpp"
#include "rsprec/sim.hpp"

#include <filesystem>
#include <stdexcept>

namespace rsprec {

/// Filesystem failure while writing results; what() names the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputPaths {
    std::filesystem::path dir;

    std::filesystem::path sweep_csv() const { return dir / "sweep.csv"; }
    std::filesystem::path alloc_csv() const { return dir / "alloc.csv"; }
    std::filesystem::path convergence_csv() const { return dir / "convergence.csv"; }
    std::filesystem::path run_json() const { return dir / "run.json"; }
};

/// Writes the four result files:
///   sweep.csv        method,p_dl_db,mean_sum_rate_bpcu
///   alloc.csv        method,p_dl_db,stream,mean_power_fraction  (Com, UE1..UEK)
///   convergence.csv  method,p_dl_db,trial,iterations,wall_time_s
///   run.json         resolved config + aggregate metadata (slopes, genie rates)
/// Numeric formatting is locale-independent and shortest-round-trip, so
/// identical inputs produce identical bytes.
void emit_results(const AggregateResult& aggregate, const std::vector<TrialResult>& raw,
                  const RunConfig& config, const OutputPaths& paths);

} // namespace rsprec
