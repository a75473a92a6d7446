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

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

namespace rsprec {

namespace {

// Shortest round-trip decimal form, independent of locale.
void append_number(std::string& s, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    s.append(buf, res.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out)
        throw IoError("write failed: " + path.string());
}

std::string stream_label(std::size_t index) {
    return index == 0 ? std::string("Com") : "UE" + std::to_string(index);
}

} // namespace

void emit_results(const AggregateResult& aggregate, const std::vector<TrialResult>& raw,
                  const RunConfig& config, const OutputPaths& paths) {
    std::error_code ec;
    std::filesystem::create_directories(paths.dir, ec);
    if (ec)
        throw IoError("cannot create output directory: " + paths.dir.string());

    const std::size_t n_methods = aggregate.methods.size();
    const std::size_t n_powers = aggregate.powers_db.size();

    {
        std::string csv = "method,p_dl_db,mean_sum_rate_bpcu\n";
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
            for (std::size_t pi = 0; pi < n_powers; ++pi) {
                csv += method_id(aggregate.methods[mi]);
                csv += ',';
                append_number(csv, aggregate.powers_db[pi]);
                csv += ',';
                append_number(csv, aggregate.mean_sum_rate(mi, pi));
                csv += '\n';
            }
        }
        write_file(paths.sweep_csv(), csv);
    }

    {
        std::string csv = "method,p_dl_db,stream,mean_power_fraction\n";
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
            for (std::size_t pi = 0; pi < n_powers; ++pi) {
                const auto& fractions = aggregate.mean_power_fraction[mi][pi];
                for (std::size_t s = 0; s < fractions.size(); ++s) {
                    csv += method_id(aggregate.methods[mi]);
                    csv += ',';
                    append_number(csv, aggregate.powers_db[pi]);
                    csv += ',';
                    csv += stream_label(s);
                    csv += ',';
                    append_number(csv, fractions[s]);
                    csv += '\n';
                }
            }
        }
        write_file(paths.alloc_csv(), csv);
    }

    {
        std::string csv = "method,p_dl_db,trial,iterations,wall_time_s\n";
        for (const TrialResult& r : raw) {
            csv += method_id(r.method);
            csv += ',';
            append_number(csv, r.p_dl_db);
            csv += ',';
            csv += std::to_string(r.trial);
            csv += ',';
            csv += std::to_string(r.iterations);
            csv += ',';
            append_number(csv, r.wall_time_s);
            csv += '\n';
        }
        write_file(paths.convergence_csv(), csv);
    }

    {
        nlohmann::ordered_json run;
        run["config"] = nlohmann::ordered_json::parse(config_to_json_string(config));

        nlohmann::ordered_json results;
        results["covariance_redraw_used"] =
            aggregate.covariance_redraw_used == CovarianceRedraw::per_trial ? "per-trial"
                                                                            : "fixed";
        results["n_trials"] = aggregate.n_trials;
        results["powers_db"] = aggregate.powers_db;
        results["slope_window_db_min"] = aggregate.slope_window_db_min;

        nlohmann::ordered_json slopes, means, genie_means;
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
            const std::string id = method_id(aggregate.methods[mi]);
            if (aggregate.high_snr_slope[mi])
                slopes[id] = *aggregate.high_snr_slope[mi];
            else
                slopes[id] = nullptr;
            std::vector<double> row(n_powers), genie_row(n_powers);
            for (std::size_t pi = 0; pi < n_powers; ++pi) {
                row[pi] = aggregate.mean_sum_rate(mi, pi);
                genie_row[pi] = aggregate.mean_sum_rate_genie(mi, pi);
            }
            means[id] = row;
            genie_means[id] = genie_row;
        }
        results["high_snr_slope"] = std::move(slopes);
        results["mean_sum_rate"] = std::move(means);
        // True-channel metric, reported alongside the lower bound used above.
        results["mean_sum_rate_genie"] = std::move(genie_means);
        run["results"] = std::move(results);

        write_file(paths.run_json(), run.dump(2) + "\n");
    }
}

} // namespace rsprec
