// SPDX-License-Identifier: Apache-2.0
//
// Run configuration shared by all CLI commands. Values are resolved in the
// documented precedence order: built-in defaults, then the config file, then
// ZETAPRIME_* environment variables, then command-line flags (the flag layer
// lives in the CLI itself). Every output file records the resolved
// configuration hash so results can be traced to the exact settings.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace zetaprime {

struct RunConfig {
    double T_max = 1000.0;
    double eval_tol = 1e-9;    // function evaluation accuracy target
    double refine_tol = 2.5e-10; // zero refinement stopping size
    double quad_tol = 1e-8;    // integral accuracy target
    double band_C = 3.0;       // frozen constant for the C*log T count bands
    double c1 = 1.0;           // frozen constant for the zero-count scale
    std::uint64_t seed = 1069;
    std::string out_dir = "out";
    std::string cache_dir = "cache";
    int jobs = 1;
};

// Parse a JSON config file; unknown keys are rejected so typos cannot
// silently fall back to defaults. Throws std::runtime_error on problems.
RunConfig config_from_file(const std::filesystem::path& path,
                           const RunConfig& base = {});

// Overlay any ZETAPRIME_T_MAX, ZETAPRIME_EVAL_TOL, ZETAPRIME_REFINE_TOL,
// ZETAPRIME_QUAD_TOL, ZETAPRIME_BAND_C, ZETAPRIME_C1, ZETAPRIME_SEED,
// ZETAPRIME_OUT, ZETAPRIME_CACHE, ZETAPRIME_JOBS present in the environment.
void apply_env_overrides(RunConfig& cfg);

// Fixed-key-order serialization; the basis for the config hash.
std::string canonical_config_json(const RunConfig& cfg);

std::uint64_t config_hash(const RunConfig& cfg);

// Comment block ("# key=value" lines) embedded at the top of every output
// file: code version, config hash, and the canonical config itself.
std::string provenance_header(const RunConfig& cfg);

// Validate invariants (positive tolerances, jobs >= 1); throws
// std::invalid_argument naming the offending field.
void validate(const RunConfig& cfg);

} // namespace zetaprime
