// SPDX-License-Identifier: Apache-2.0

#include "zetaprime/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zetaprime/version.hpp"
#include "zetaprime/zero_table.hpp"

namespace zetaprime {

RunConfig config_from_file(const std::filesystem::path& path,
                           const RunConfig& base) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config: parse error in " + path.string() +
                                 ": " + e.what());
    }
    static const std::set<std::string> known{
        "T_max", "eval_tol", "refine_tol", "quad_tol", "band_C",
        "c1",    "seed",     "out_dir",    "cache_dir", "jobs"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::runtime_error("config: unknown key \"" + it.key() +
                                     "\" in " + path.string());
    RunConfig cfg = base;
    if (j.contains("T_max")) cfg.T_max = j["T_max"].get<double>();
    if (j.contains("eval_tol")) cfg.eval_tol = j["eval_tol"].get<double>();
    if (j.contains("refine_tol"))
        cfg.refine_tol = j["refine_tol"].get<double>();
    if (j.contains("quad_tol")) cfg.quad_tol = j["quad_tol"].get<double>();
    if (j.contains("band_C")) cfg.band_C = j["band_C"].get<double>();
    if (j.contains("c1")) cfg.c1 = j["c1"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("cache_dir"))
        cfg.cache_dir = j["cache_dir"].get<std::string>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    return cfg;
}

namespace {

const char* env(const char* name) { return std::getenv(name); }

double env_double(const char* name, double fallback) {
    const char* v = env(name);
    if (!v) return fallback;
    try {
        return std::stod(v);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("config: bad number in $") +
                                 name);
    }
}

} // namespace

void apply_env_overrides(RunConfig& cfg) {
    cfg.T_max = env_double("ZETAPRIME_T_MAX", cfg.T_max);
    cfg.eval_tol = env_double("ZETAPRIME_EVAL_TOL", cfg.eval_tol);
    cfg.refine_tol = env_double("ZETAPRIME_REFINE_TOL", cfg.refine_tol);
    cfg.quad_tol = env_double("ZETAPRIME_QUAD_TOL", cfg.quad_tol);
    cfg.band_C = env_double("ZETAPRIME_BAND_C", cfg.band_C);
    cfg.c1 = env_double("ZETAPRIME_C1", cfg.c1);
    if (const char* v = env("ZETAPRIME_SEED")) {
        try {
            cfg.seed = std::stoull(v);
        } catch (const std::exception&) {
            throw std::runtime_error("config: bad number in $ZETAPRIME_SEED");
        }
    }
    if (const char* v = env("ZETAPRIME_OUT")) cfg.out_dir = v;
    if (const char* v = env("ZETAPRIME_CACHE")) cfg.cache_dir = v;
    if (const char* v = env("ZETAPRIME_JOBS")) {
        try {
            cfg.jobs = std::stoi(v);
        } catch (const std::exception&) {
            throw std::runtime_error("config: bad number in $ZETAPRIME_JOBS");
        }
    }
}

std::string canonical_config_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["T_max"] = cfg.T_max;
    j["eval_tol"] = cfg.eval_tol;
    j["refine_tol"] = cfg.refine_tol;
    j["quad_tol"] = cfg.quad_tol;
    j["band_C"] = cfg.band_C;
    j["c1"] = cfg.c1;
    j["seed"] = cfg.seed;
    j["out_dir"] = cfg.out_dir;
    j["cache_dir"] = cfg.cache_dir;
    j["jobs"] = cfg.jobs;
    return j.dump();
}

std::uint64_t config_hash(const RunConfig& cfg) {
    const std::string s = canonical_config_json(cfg);
    return fnv1a(s.data(), s.size());
}

std::string provenance_header(const RunConfig& cfg) {
    std::ostringstream out;
    out << "# zetaprime " << kCodeVersion << "\n";
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    out << "# config_hash=" << hex << "\n";
    out << "# config=" << canonical_config_json(cfg) << "\n";
    return out.str();
}

void validate(const RunConfig& cfg) {
    if (!(cfg.T_max > 0))
        throw std::invalid_argument("config: T_max must be positive");
    if (!(cfg.eval_tol > 0))
        throw std::invalid_argument("config: eval_tol must be positive");
    if (!(cfg.refine_tol > 0))
        throw std::invalid_argument("config: refine_tol must be positive");
    if (!(cfg.quad_tol > 0))
        throw std::invalid_argument("config: quad_tol must be positive");
    if (!(cfg.band_C > 0))
        throw std::invalid_argument("config: band_C must be positive");
    if (!(cfg.c1 > 0))
        throw std::invalid_argument("config: c1 must be positive");
    if (cfg.jobs < 1)
        throw std::invalid_argument("config: jobs must be at least 1");
}

} // namespace zetaprime
