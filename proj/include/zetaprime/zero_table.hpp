// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace zetaprime {

struct ZeroRecord {
    double gamma = 0;        // imaginary part
    double beta = 0;         // real part
    double residual = 0;     // |f| at the point; cluster diameter if unresolved
    double newton_error = 0; // size of the last correction step
    int multiplicity = 1;    // >= 2 marks an unresolved cluster
};

// A run of located zeros together with the parameters that produced it.
// Tables are persisted as text: a header block, then one record per line at
// 18 significant digits, gamma-ascending, protected by a content hash.
struct ZeroTable {
    std::string function; // "zeta" or "zeta_prime"
    double t_lo = 0;
    double t_hi = 0;
    double eval_tol = 0;
    double refine_tol = 0;
    std::string code_version;
    std::vector<ZeroRecord> records;
};

// 64-bit FNV-1a
std::uint64_t fnv1a(const void* data, std::size_t n,
                    std::uint64_t seed = 14695981039346656037ull);

// Serialize one record exactly as it is hashed and stored.
std::string format_zero_record(const ZeroRecord& r);

// Throws MalformedTable on syntax or hash problems, CacheVersionMismatch
// when the file was produced by a different code version or with different
// tolerances than the running build would reproduce.
ZeroTable load_zero_table(const std::filesystem::path& path);

void save_zero_table(const ZeroTable& table,
                     const std::filesystem::path& path);

} // namespace zetaprime
