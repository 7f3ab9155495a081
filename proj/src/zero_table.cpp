// SPDX-License-Identifier: Apache-2.0
#include "zetaprime/zero_table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zetaprime/errors.hpp"
#include "zetaprime/version.hpp"

namespace zetaprime {

namespace {
constexpr const char* kMagic = "zetaprime-zeros 1";

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(v));
    return buf;
}
} // namespace

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_zero_record(const ZeroRecord& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.17e %.17e %.17e %.17e %d\n", r.gamma,
                  r.beta, r.residual, r.newton_error, r.multiplicity);
    return buf;
}

void save_zero_table(const ZeroTable& table,
                     const std::filesystem::path& path) {
    for (std::size_t i = 1; i < table.records.size(); ++i)
        if (table.records[i].gamma < table.records[i - 1].gamma)
            throw MalformedTable(
                "zero table: records must be gamma-ascending before saving");
    std::string body;
    for (const auto& r : table.records) body += format_zero_record(r);
    const std::uint64_t h = fnv1a(body.data(), body.size());

    std::ostringstream os;
    os << kMagic << '\n';
    os << "function " << table.function << '\n';
    char num[64];
    std::snprintf(num, sizeof num, "%.17e %.17e", table.t_lo, table.t_hi);
    os << "range " << num << '\n';
    std::snprintf(num, sizeof num, "%.17e", table.eval_tol);
    os << "eval_tol " << num << '\n';
    std::snprintf(num, sizeof num, "%.17e", table.refine_tol);
    os << "refine_tol " << num << '\n';
    os << "code_version " << table.code_version << '\n';
    os << "count " << table.records.size() << '\n';
    os << "hash " << hex64(h) << '\n';
    os << "end_header\n";
    os << body;

    // write-then-rename so an interrupted save never leaves a torn table
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw MalformedTable("zero table: cannot open " + tmp.string());
        f << os.str();
        if (!f.flush())
            throw MalformedTable("zero table: write failed for " +
                                 tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

ZeroTable load_zero_table(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw MalformedTable("zero table: cannot open " + path.string());
    std::string line;
    if (!std::getline(f, line) || line != kMagic)
        throw MalformedTable("zero table: bad magic in " + path.string());

    ZeroTable table;
    std::size_t count = 0;
    std::string hash_hex;
    bool saw_end = false;
    while (std::getline(f, line)) {
        if (line == "end_header") {
            saw_end = true;
            break;
        }
        std::istringstream is(line);
        std::string key;
        is >> key;
        if (key == "function")
            is >> table.function;
        else if (key == "range")
            is >> table.t_lo >> table.t_hi;
        else if (key == "eval_tol")
            is >> table.eval_tol;
        else if (key == "refine_tol")
            is >> table.refine_tol;
        else if (key == "code_version")
            is >> table.code_version;
        else if (key == "count")
            is >> count;
        else if (key == "hash")
            is >> hash_hex;
        else
            throw MalformedTable("zero table: unknown header field '" + key +
                                 "'");
        if (is.fail())
            throw MalformedTable("zero table: unparsable header line '" +
                                 line + "'");
    }
    if (!saw_end)
        throw MalformedTable("zero table: header not terminated in " +
                             path.string());
    if (table.code_version != kCodeVersion)
        throw CacheVersionMismatch(
            "zero table: written by code version '" + table.code_version +
            "', running " + kCodeVersion);

    std::string body;
    table.records.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(f, line))
            throw MalformedTable("zero table: expected " +
                                 std::to_string(count) + " records, got " +
                                 std::to_string(i));
        body += line;
        body += '\n';
        ZeroRecord r;
        std::istringstream is(line);
        is >> r.gamma >> r.beta >> r.residual >> r.newton_error >>
            r.multiplicity;
        if (is.fail())
            throw MalformedTable("zero table: unparsable record '" + line +
                                 "'");
        if (!std::isfinite(r.gamma) || !std::isfinite(r.beta) ||
            r.multiplicity < 1)
            throw MalformedTable("zero table: invalid record '" + line + "'");
        if (!table.records.empty() && r.gamma < table.records.back().gamma)
            throw MalformedTable("zero table: records out of order");
        table.records.push_back(r);
    }
    if (std::getline(f, line) && !line.empty())
        throw MalformedTable("zero table: trailing data after records");
    if (hex64(fnv1a(body.data(), body.size())) != hash_hex)
        throw MalformedTable("zero table: content hash mismatch in " +
                             path.string());
    return table;
}

} // namespace zetaprime
