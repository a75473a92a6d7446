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

#include "rsprec/run_config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace rsprec {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) {
    throw ConfigParseError("config: " + what);
}

[[noreturn]] void validation_fail(const std::string& what) {
    throw ConfigValidationError("config: " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items())
        if (allowed.find(item.key()) == allowed.end())
            parse_fail("unknown key '" + item.key() + "' in " + where);
}

double get_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        parse_fail(std::string("field '") + key + "' must be a number");
    return obj[key].get<double>();
}

std::uint64_t get_uint(const json& obj, const char* key, std::uint64_t fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number_unsigned())
        parse_fail(std::string("field '") + key + "' must be a nonnegative integer");
    return obj[key].get<std::uint64_t>();
}

std::string get_string(const json& obj, const char* key, const std::string& fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_string())
        parse_fail(std::string("field '") + key + "' must be a string");
    return obj[key].get<std::string>();
}

CovarianceModel parse_covariance(const json& obj) {
    if (!obj.is_object())
        parse_fail("field 'covariance' must be an object");
    const std::string model = get_string(obj, "model", "");
    if (model == "identity") {
        reject_unknown_keys(obj, {"model"}, "covariance");
        return CovarianceModel::identity();
    }
    if (model == "exponential") {
        reject_unknown_keys(obj, {"model", "rho"}, "covariance");
        return CovarianceModel::exponential(get_number(obj, "rho", 0.7));
    }
    if (model == "rank-limited") {
        reject_unknown_keys(obj, {"model", "rank", "decay"}, "covariance");
        return CovarianceModel::rank_limited(get_uint(obj, "rank", 2),
                                             get_number(obj, "decay", 0.5));
    }
    parse_fail("covariance model must be one of identity|exponential|rank-limited");
}

std::string covariance_model_id(const CovarianceModel& m) {
    switch (m.kind) {
    case CovarianceKind::identity: return "identity";
    case CovarianceKind::exponential: return "exponential";
    case CovarianceKind::rank_limited: return "rank-limited";
    }
    return "unknown";
}

} // namespace

RunConfig default_config() {
    RunConfig cfg;
    cfg.spec.m = 16;
    cfg.spec.k = 5;
    cfg.spec.t_dl = 3;
    cfg.spec.alpha_c = 0.5;
    cfg.spec.n_trials = 100;
    for (int db = -10; db <= 40; db += 5)
        cfg.spec.powers_db.push_back(static_cast<double>(db));
    cfg.spec.methods = {Method::awamse_rs, Method::awamse_no_rs, Method::mmse};
    cfg.spec.covariance = CovarianceModel::exponential(0.7);
    cfg.spec.pilot = PilotKind::dft_truncated;
    cfg.spec.covariance_redraw = CovarianceRedraw::per_trial;
    cfg.spec.seed = 1;
    cfg.spec.tol = 1e-5;
    cfg.spec.max_iter = 200;
    cfg.out_dir = "results";
    cfg.threads = 0;
    cfg.verbosity = 1;
    cfg.powers_explicit = false;
    return cfg;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg = default_config();

    const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
    if (blank)
        return cfg;

    json root;
    try {
        root = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(e.what());
    }
    if (!root.is_object())
        parse_fail("top level must be an object");

    static const std::set<std::string> top_keys = {
        "m",      "k",       "t_dl",           "alpha_c",           "seed",
        "n_trials", "powers_db", "methods",    "covariance",        "pilot",
        "covariance_redraw", "tol", "max_iter", "out_dir",          "threads",
        "verbosity"};
    reject_unknown_keys(root, top_keys, "the top-level object");

    cfg.spec.m = get_uint(root, "m", cfg.spec.m);
    cfg.spec.k = get_uint(root, "k", cfg.spec.k);
    cfg.spec.t_dl = get_uint(root, "t_dl", cfg.spec.t_dl);
    cfg.spec.alpha_c = get_number(root, "alpha_c", cfg.spec.alpha_c);
    cfg.spec.seed = get_uint(root, "seed", cfg.spec.seed);
    cfg.spec.n_trials = get_uint(root, "n_trials", cfg.spec.n_trials);
    cfg.spec.tol = get_number(root, "tol", cfg.spec.tol);
    cfg.spec.max_iter = get_uint(root, "max_iter", cfg.spec.max_iter);

    if (root.contains("powers_db")) {
        if (!root["powers_db"].is_array())
            parse_fail("field 'powers_db' must be an array of numbers");
        cfg.spec.powers_db.clear();
        for (const auto& v : root["powers_db"]) {
            if (!v.is_number())
                parse_fail("field 'powers_db' must contain only numbers");
            cfg.spec.powers_db.push_back(v.get<double>());
        }
        cfg.powers_explicit = true;
    }

    if (root.contains("methods")) {
        if (!root["methods"].is_array())
            parse_fail("field 'methods' must be an array of strings");
        cfg.spec.methods.clear();
        for (const auto& v : root["methods"]) {
            if (!v.is_string())
                parse_fail("field 'methods' must contain only strings");
            const auto method = method_from_id(v.get<std::string>());
            if (!method)
                validation_fail("unknown method '" + v.get<std::string>() +
                                "' (expected awamse-rs|awamse-nors|mmse)");
            if (std::find(cfg.spec.methods.begin(), cfg.spec.methods.end(), *method) !=
                cfg.spec.methods.end())
                validation_fail("duplicate method '" + v.get<std::string>() + "'");
            cfg.spec.methods.push_back(*method);
        }
    }

    if (root.contains("covariance"))
        cfg.spec.covariance = parse_covariance(root["covariance"]);

    const std::string pilot = get_string(root, "pilot", "dft-truncated");
    if (pilot == "dft-truncated")
        cfg.spec.pilot = PilotKind::dft_truncated;
    else if (pilot == "random-unitary")
        cfg.spec.pilot = PilotKind::random_unitary;
    else
        validation_fail("pilot must be dft-truncated or random-unitary");

    const std::string redraw = get_string(root, "covariance_redraw", "per-trial");
    if (redraw == "per-trial")
        cfg.spec.covariance_redraw = CovarianceRedraw::per_trial;
    else if (redraw == "fixed")
        cfg.spec.covariance_redraw = CovarianceRedraw::fixed;
    else
        validation_fail("covariance_redraw must be per-trial or fixed");

    cfg.out_dir = get_string(root, "out_dir", cfg.out_dir);
    cfg.threads = static_cast<unsigned>(get_uint(root, "threads", cfg.threads));
    if (root.contains("verbosity")) {
        if (!root["verbosity"].is_number_integer())
            parse_fail("field 'verbosity' must be an integer");
        cfg.verbosity = root["verbosity"].get<int>();
        if (cfg.verbosity < 0)
            validation_fail("verbosity must be nonnegative");
    }

    try {
        cfg.spec.validate();
    } catch (const std::invalid_argument& e) {
        validation_fail(e.what());
    }
    return cfg;
}

std::string config_to_json_string(const RunConfig& config, int indent) {
    json j;
    j["m"] = config.spec.m;
    j["k"] = config.spec.k;
    j["t_dl"] = config.spec.t_dl;
    j["alpha_c"] = config.spec.alpha_c;
    j["seed"] = config.spec.seed;
    j["n_trials"] = config.spec.n_trials;
    j["powers_db"] = config.spec.powers_db;
    json methods = json::array();
    for (Method m : config.spec.methods)
        methods.push_back(method_id(m));
    j["methods"] = std::move(methods);

    json cov;
    cov["model"] = covariance_model_id(config.spec.covariance);
    if (config.spec.covariance.kind == CovarianceKind::exponential)
        cov["rho"] = config.spec.covariance.rho;
    if (config.spec.covariance.kind == CovarianceKind::rank_limited) {
        cov["rank"] = config.spec.covariance.rank;
        cov["decay"] = config.spec.covariance.decay;
    }
    j["covariance"] = std::move(cov);

    j["pilot"] = config.spec.pilot == PilotKind::dft_truncated ? "dft-truncated"
                                                               : "random-unitary";
    j["covariance_redraw"] =
        config.spec.covariance_redraw == CovarianceRedraw::per_trial ? "per-trial"
                                                                     : "fixed";
    j["tol"] = config.spec.tol;
    j["max_iter"] = config.spec.max_iter;
    j["out_dir"] = config.out_dir;
    j["threads"] = config.threads;
    j["verbosity"] = config.verbosity;
    return j.dump(indent);
}

} // namespace rsprec
