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

#include "rsprec/sim.hpp"

#include <stdexcept>
#include <string>

namespace rsprec {

/// Malformed config text (bad JSON, unknown key, wrong type).
struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed config with an out-of-range or inconsistent value.
struct ConfigValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Resolved run configuration: the sweep plus front-end concerns.
struct RunConfig {
    SweepSpec spec;
    std::string out_dir = "results";
    unsigned threads = 0; ///< 0 = hardware concurrency
    int verbosity = 1;
    bool powers_explicit = false; ///< powers_db appeared in the config text
};

/// The default scenario: M=16, K=5, T_dl=3, alpha_c=0.5, 100 trials,
/// powers -10..40 dB in 5 dB steps, all methods, exponential covariance
/// rho=0.7.
RunConfig default_config();

/// Parses the canonical JSON config. Empty input yields default_config().
/// Unknown keys are rejected (ConfigParseError); all physical parameters are
/// validated before any computation (ConfigValidationError).
RunConfig parse_config(const std::string& text);

/// Canonical serialization; parse_config(config_to_json_string(c)) resolves
/// to the same configuration. This is the "config" section of run.json.
std::string config_to_json_string(const RunConfig& config, int indent = 2);

} // namespace rsprec
