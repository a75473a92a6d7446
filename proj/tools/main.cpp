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

#include "rsprec/results_io.hpp"
#include "rsprec/run_config.hpp"
#include "rsprec/selftest.hpp"
#include "rsprec/sim.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes, also printed as a machine-readable category on stderr.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitIo = 5;

int fail(int code, const char* category, const std::string& message) {
    std::cerr << "error: category=" << category << " " << message << "\n";
    return code;
}

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string methods;
    std::optional<unsigned> threads;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file (defaults apply if omitted)");
    cmd->add_option("--out", opts.out_dir, "output directory (overrides config)");
    cmd->add_option("--seed", opts.seed, "RNG seed (overrides config)");
    cmd->add_option("--methods", opts.methods,
                    "comma-separated subset of awamse-rs,awamse-nors,mmse");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware concurrency)");
}

rsprec::RunConfig load_config(const CommonOptions& opts) {
    std::string text;
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path, std::ios::binary);
        if (!in)
            throw rsprec::IoError("cannot read config: " + opts.config_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    rsprec::RunConfig cfg = rsprec::parse_config(text);

    if (!opts.out_dir.empty())
        cfg.out_dir = opts.out_dir;
    if (opts.seed)
        cfg.spec.seed = *opts.seed;
    if (opts.threads)
        cfg.threads = *opts.threads;
    if (!opts.methods.empty()) {
        std::vector<rsprec::Method> methods;
        std::stringstream ss(opts.methods);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto m = rsprec::method_from_id(item);
            if (!m)
                throw rsprec::ConfigValidationError("unknown method '" + item + "'");
            methods.push_back(*m);
        }
        if (methods.empty())
            throw rsprec::ConfigValidationError("--methods must name at least one method");
        cfg.spec.methods = std::move(methods);
    }
    return cfg;
}

int run_experiment(const CommonOptions& opts, const std::vector<double>& default_powers) {
    rsprec::RunConfig cfg;
    try {
        cfg = load_config(opts);
    } catch (const rsprec::ConfigParseError& e) {
        return fail(kExitParse, "config-parse", e.what());
    } catch (const rsprec::ConfigValidationError& e) {
        return fail(kExitValidation, "config-validation", e.what());
    } catch (const rsprec::IoError& e) {
        return fail(kExitIo, "io", e.what());
    }

    if (!default_powers.empty() && !cfg.powers_explicit)
        cfg.spec.powers_db = default_powers;

    try {
        cfg.spec.validate();
    } catch (const std::invalid_argument& e) {
        return fail(kExitValidation, "config-validation", e.what());
    }

    rsprec::SweepOutput output;
    try {
        if (cfg.verbosity >= 1) {
            std::cerr << "running " << cfg.spec.n_trials << " trials x "
                      << cfg.spec.powers_db.size() << " powers x "
                      << cfg.spec.methods.size() << " methods (seed "
                      << cfg.spec.seed << ")\n";
        }
        output = rsprec::run_sweep(cfg.spec, cfg.threads);
    } catch (const rsprec::SweepError& e) {
        return fail(kExitNumerical, "numerical-abort", e.what());
    } catch (const std::exception& e) {
        return fail(kExitNumerical, "numerical-abort", e.what());
    }

    try {
        rsprec::emit_results(output.aggregate, output.raw, cfg,
                             rsprec::OutputPaths{cfg.out_dir});
    } catch (const rsprec::IoError& e) {
        return fail(kExitIo, "io", e.what());
    }

    if (cfg.verbosity >= 1) {
        std::cerr << "wrote sweep.csv, alloc.csv, convergence.csv, run.json to "
                  << cfg.out_dir << "\n";
        if (!output.errors.empty())
            std::cerr << output.errors.size() << " trial cells failed numerically (recorded)\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rate-splitting precoder design and Monte-Carlo link simulation"};
    app.require_subcommand(1);

    CommonOptions sweep_opts, alloc_opts, conv_opts;

    CLI::App* sweep = app.add_subcommand(
        "sweep", "sum rate vs transmit power over the configured grid");
    add_common_options(sweep, sweep_opts);

    CLI::App* alloc = app.add_subcommand(
        "alloc", "per-stream power allocation (defaults to a single 40 dB point)");
    add_common_options(alloc, alloc_opts);

    CLI::App* conv = app.add_subcommand(
        "convergence", "iteration/run-time CDF data (defaults to a single 20 dB point)");
    add_common_options(conv, conv_opts);

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the built-in oracle and invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        std::ostringstream ss;
        ss << e.what();
        return fail(kExitParse, "usage", ss.str());
    }

    if (selftest->parsed())
        return rsprec::run_selftest(std::cout) ? kExitOk : 1;
    if (sweep->parsed())
        return run_experiment(sweep_opts, {});
    if (alloc->parsed())
        return run_experiment(alloc_opts, {40.0});
    if (conv->parsed())
        return run_experiment(conv_opts, {20.0});
    return kExitParse;
}
