// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, 2 usage error, 3 missing
// prerequisite (including unusable caches), 4 numerical failure.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetaprime/config.hpp"
#include "zetaprime/counts.hpp"
#include "zetaprime/errors.hpp"
#include "zetaprime/eval.hpp"
#include "zetaprime/littlewood.hpp"
#include "zetaprime/rmt.hpp"
#include "zetaprime/rng.hpp"
#include "zetaprime/value_dist.hpp"
#include "zetaprime/version.hpp"
#include "zetaprime/zero_finder.hpp"
#include "zetaprime/zero_table.hpp"

namespace fs = std::filesystem;
using namespace zetaprime;

namespace {

std::string fmt18(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", v);
    return buf;
}

// Accepts "a", "bi", "a+bi", "a-bi" with exponents, e.g. "2.5e-1+14.13i".
bool parse_complex(std::string s, double& re, double& im) {
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) return false;
    auto to_double = [](const std::string& part, double& out) {
        if (part.empty()) return false;
        std::size_t used = 0;
        try {
            out = std::stod(part, &used);
        } catch (const std::exception&) {
            return false;
        }
        return used == part.size();
    };
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
            split = k; // keep the last sign so "1e+3-2i" splits at the '-'
    }
    if (s.back() == 'i') {
        std::string re_part = split == std::string::npos
                                  ? std::string()
                                  : s.substr(0, split);
        std::string im_part = split == std::string::npos
                                  ? s.substr(0, s.size() - 1)
                                  : s.substr(split, s.size() - split - 1);
        if (im_part.empty() || im_part == "+" || im_part == "-")
            im_part += "1";
        if (re_part.empty()) re = 0;
        else if (!to_double(re_part, re)) return false;
        return to_double(im_part, im);
    }
    im = 0;
    return to_double(s, re);
}

std::uint64_t table_hash(const ZeroTable& t) {
    std::uint64_t h = 14695981039346656037ull;
    for (const ZeroRecord& r : t.records) {
        const std::string line = format_zero_record(r);
        h = fnv1a(line.data(), line.size(), h);
    }
    return h;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& command,
                          const std::string& label, const std::string& file) {
    const fs::path dir = fs::path(cfg.out_dir) / command / label;
    fs::create_directories(dir);
    std::ofstream out(dir / file);
    if (!out)
        throw std::runtime_error("cannot write " + (dir / file).string());
    out << provenance_header(cfg);
    return out;
}

ZeroSearchOptions search_options(const RunConfig& cfg) {
    ZeroSearchOptions opt;
    opt.eval_tol = cfg.eval_tol;
    opt.refine_tol = cfg.refine_tol;
    return opt;
}

// ---------------------------------------------------------------- commands

int run_eval(const std::string& fn, const std::string& s_str, double tol) {
    double re = 0, im = 0;
    if (!parse_complex(s_str, re, im)) {
        std::cerr << "eval: cannot parse --s \"" << s_str
                  << "\" as a complex number (try forms like 0.75+100i)\n";
        return 2;
    }
    const StripPoint p{re, im};
    ComplexValueWithError v;
    if (fn == "zeta") v = eval_zeta(p, tol);
    else if (fn == "zetap") v = eval_zeta_prime(p, tol);
    else if (fn == "zetapp") v = eval_zeta_second(p, tol);
    else if (fn == "logderiv") v = eval_log_deriv(p, tol);
    else {
        std::cerr << "eval: unknown --fn \"" << fn
                  << "\" (zeta|zetap|zetapp|logderiv)\n";
        return 2;
    }
    std::cout << fn << "(" << fmt18(re) << " + " << fmt18(im) << " i) = "
              << fmt18(v.value.real()) << " " << fmt18(v.value.imag())
              << " i   abs_error <= " << fmt18(v.abs_error) << "\n";
    return 0;
}

int run_zeros(const RunConfig& cfg, const std::string& fn_name, double T,
              const std::string& label) {
    const TargetFunction fn = fn_name == "zeta" ? TargetFunction::zeta
                                                : TargetFunction::zeta_prime;
    const ZeroTable table =
        cached_zeros_up_to(fn, T, cfg.cache_dir, search_options(cfg));
    std::ofstream out = open_output(cfg, "zeros", label, fn_name + ".csv");
    out << "gamma,beta,residual,newton_error,multiplicity\n";
    for (const ZeroRecord& r : table.records)
        out << fmt18(r.gamma) << "," << fmt18(r.beta) << ","
            << fmt18(r.residual) << "," << fmt18(r.newton_error) << ","
            << r.multiplicity << "\n";
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(table_hash(table)));
    std::cout << fn_name << ": " << table.records.size()
              << " zeros with gamma in (0, " << table.t_hi
              << "], table_hash=" << hex << "\n";
    return 0;
}

int run_counts(const RunConfig& cfg, double T,
               const std::vector<double>& sigmas, const std::string& label) {
    const ZeroTable zp = cached_zeros_up_to(TargetFunction::zeta_prime, T,
                                            cfg.cache_dir,
                                            search_options(cfg));
    {
        std::ofstream out = open_output(cfg, "counts", label, "berndt.csv");
        out << "T,observed,predicted,residual,band,within_band\n";
        std::vector<double> grid;
        for (double Tv = 100; Tv < T - 1e-9; Tv += 100) grid.push_back(Tv);
        grid.push_back(T);
        for (double Tv : grid) {
            const CountReport r = count_nprime(Tv, zp, cfg.band_C);
            out << fmt18(r.T) << "," << r.observed << ","
                << fmt18(r.predicted) << "," << fmt18(r.residual) << ","
                << fmt18(r.tolerance_band) << ","
                << (std::abs(r.residual) <= r.tolerance_band ? 1 : 0) << "\n";
        }
    }
    {
        std::ofstream out =
            open_output(cfg, "counts", label, "sigma_counts.csv");
        out << "sigma,T,observed,predicted,band,normalized,"
               "in_stated_range,L_direct,L_integrated\n";
        for (double sigma : sigmas) {
            const CountReport r = count_nprime_sigma(sigma, T, zp);
            const WeightedSumL L = weighted_sum_L(sigma, T, zp);
            const double normalized =
                r.observed * 2.0 * 3.14159265358979324 * (sigma - 0.5) / T;
            out << fmt18(sigma) << "," << fmt18(T) << "," << r.observed << ","
                << fmt18(r.predicted) << "," << fmt18(r.tolerance_band) << ","
                << fmt18(normalized) << "," << (r.in_stated_range ? 1 : 0)
                << "," << fmt18(L.direct) << "," << fmt18(L.integrated)
                << "\n";
        }
    }
    std::cout << "counts: max unit-interval increment ratio = "
              << max_unit_interval_ratio(T, zp) << "\n";
    return 0;
}

int run_littlewood(const RunConfig& cfg, const std::vector<double>& sigmas,
                   const std::vector<double>& Ts, const std::string& label) {
    double T_need = 0;
    for (double T : Ts) T_need = std::max(T_need, T);
    const ZeroTable zz = cached_zeros_up_to(TargetFunction::zeta, T_need,
                                            cfg.cache_dir,
                                            search_options(cfg));
    const ZeroTable zp = cached_zeros_up_to(TargetFunction::zeta_prime,
                                            T_need, cfg.cache_dir,
                                            search_options(cfg));
    std::ofstream ids = open_output(cfg, "littlewood", label,
                                    "identities.csv");
    ids << "fn,sigma,T,zero_sum,integral,main_term,residual,band,"
           "quad_error\n";
    std::ofstream thm = open_output(cfg, "littlewood", label,
                                    "theorems.csv");
    thm << "comparison,sigma,T,lhs,rhs,residual,residual_over_T,E,"
           "in_stated_range,quad_error\n";
    for (double T : Ts) {
        for (double sigma : sigmas) {
            const LittlewoodReport a = littlewood_residual_zeta_prime(
                sigma, T, cfg.quad_tol, zp, cfg.band_C);
            ids << "zeta_prime," << fmt18(sigma) << "," << fmt18(T) << ","
                << fmt18(a.zero_sum) << "," << fmt18(a.integral) << ","
                << fmt18(a.main_term) << "," << fmt18(a.residual) << ","
                << fmt18(a.band) << "," << fmt18(a.quad_error) << "\n";
            const LittlewoodReport b = littlewood_residual_zeta(
                sigma, T, cfg.quad_tol, zz, cfg.band_C);
            ids << "zeta," << fmt18(sigma) << "," << fmt18(T) << ","
                << fmt18(b.zero_sum) << "," << fmt18(b.integral) << ","
                << fmt18(b.main_term) << "," << fmt18(b.residual) << ","
                << fmt18(b.band) << "," << fmt18(b.quad_error) << "\n";
            const TheoremReport m =
                theorem_main_comparison(sigma, T, cfg.quad_tol, zz, zp);
            thm << "log_quotient_integral," << fmt18(sigma) << "," << fmt18(T)
                << "," << fmt18(m.lhs) << "," << fmt18(m.rhs) << ","
                << fmt18(m.residual) << "," << fmt18(m.residual_over_T) << ","
                << fmt18(m.E_value) << "," << (m.in_stated_range ? 1 : 0)
                << "," << fmt18(m.quad_error) << "\n";
            const TheoremReport w = theorem1_comparison(sigma, T, zp);
            thm << "weighted_zero_sum," << fmt18(sigma) << "," << fmt18(T)
                << "," << fmt18(w.lhs) << "," << fmt18(w.rhs) << ","
                << fmt18(w.residual) << "," << fmt18(w.residual_over_T) << ","
                << fmt18(w.E_value) << "," << (w.in_stated_range ? 1 : 0)
                << "," << fmt18(w.quad_error) << "\n";
        }
    }
    return 0;
}

int run_dist(const RunConfig& cfg, double sigma, double T, int n,
             std::uint64_t seed, bool second_moment, double r_max,
             const std::string& label) {
    const SampleSet set = sample_magnitudes(sigma, T, n, seed);
    std::vector<double> grid;
    for (double r = 0.05; r <= r_max + 1e-12; r += 0.05) grid.push_back(r);
    const EcdfReport ecdf = ecdf_vs_gaussian(set, grid);
    {
        std::ofstream out = open_output(cfg, "dist", label, "ecdf.csv");
        out << "r,ecdf,gaussian,gap,stderr\n";
        for (const EcdfRow& row : ecdf.rows)
            out << fmt18(row.r) << "," << fmt18(row.ecdf) << ","
                << fmt18(row.gaussian) << "," << fmt18(row.gap) << ","
                << fmt18(row.stderr_mc) << "\n";
    }
    nlohmann::ordered_json j;
    j["sigma"] = sigma;
    j["T"] = T;
    j["n"] = n;
    j["seed"] = seed;
    j["V"] = set.V;
    j["n_excluded"] = set.n_excluded;
    j["sup_gap"] = ecdf.sup_gap;
    const Thresholds th = compute_thresholds(sigma, T);
    j["psi"] = th.psi;
    j["epsilon"] = th.epsilon;
    j["omega"] = th.omega;
    j["n_cap"] = th.n_cap;
    j["in_stated_range"] = th.in_stated_range;
    const SmallBallReport sb = small_ball_check(set, th);
    j["small_ball_ratio_at_epsilon"] = sb.ratio_at_epsilon;
    j["small_ball_max_ratio"] = sb.max_ratio;
    if (second_moment) {
        const ZeroTable zz = cached_zeros_up_to(TargetFunction::zeta, T,
                                                cfg.cache_dir,
                                                search_options(cfg));
        const ZeroTable zp = cached_zeros_up_to(TargetFunction::zeta_prime, T,
                                                cfg.cache_dir,
                                                search_options(cfg));
        const SecondMomentReport sm =
            second_moment_check(sigma, T, cfg.quad_tol, zz, zp);
        j["second_moment"] = sm.value;
        j["second_moment_over_T_log2_T"] = sm.ratio;
        j["second_moment_quad_error"] = sm.quad_error;
    }
    std::ofstream out = open_output(cfg, "dist", label, "summary.json");
    out << j.dump(2) << "\n";
    std::cout << "dist: sup gap vs Gaussian = " << ecdf.sup_gap << " ("
              << set.n_excluded << " of " << n << " samples excluded)\n";
    return 0;
}

int run_rmt(const RunConfig& cfg, const std::vector<int>& Ns,
            const std::vector<double>& xs, const std::vector<double>& nus,
            long n, std::uint64_t seed, double T_bridge,
            const std::string& label) {
    std::ofstream radial = open_output(cfg, "rmt", label, "radial.csv");
    radial << "N,x,mean_fraction,stderr,reference,ratio\n";
    std::ofstream small = open_output(cfg, "rmt", label, "small_x.csv");
    small << "N,nu,mean_fraction,stderr,reference,ratio\n";
    std::ofstream replay = open_output(cfg, "rmt", label, "discards.csv");
    replay << "N,seed,index\n";
    for (int N : Ns) {
        const std::uint64_t ens_seed =
            child_seed(seed, static_cast<std::uint64_t>(N));
        const ModuliEnsemble e = sample_derivative_moduli(N, n, ens_seed);
        for (std::uint64_t idx : e.discarded_indices)
            replay << N << "," << ens_seed << "," << idx << "\n";
        for (double x : xs) {
            if (!(x > 0) || !(x < N)) continue;
            const EnsembleStat st = radial_from_moduli(e, x);
            const double ref = 1.0 / x;
            radial << N << "," << fmt18(x) << "," << fmt18(st.mean_fraction)
                   << "," << fmt18(st.stderr_mc) << "," << fmt18(ref) << ","
                   << fmt18(st.mean_fraction / ref) << "\n";
        }
        for (double nu : nus) {
            if (!(nu > 0) || !(nu < N)) continue;
            const EnsembleStat st = small_x_from_moduli(e, nu);
            const double ref = 8.0 / (9.0 * 3.14159265358979324) *
                               std::pow(nu, 1.5);
            small << N << "," << fmt18(nu) << "," << fmt18(st.mean_fraction)
                  << "," << fmt18(st.stderr_mc) << "," << fmt18(ref) << ","
                  << fmt18(st.mean_fraction / ref) << "\n";
        }
    }
    if (T_bridge > 0) {
        const ZeroTable zp = cached_zeros_up_to(TargetFunction::zeta_prime,
                                                T_bridge, cfg.cache_dir,
                                                search_options(cfg));
        std::ofstream bridge = open_output(cfg, "rmt", label, "bridge.csv");
        bridge << "T,x,N,sigma,zeta_fraction,rmt_fraction,rmt_stderr,ratio,"
                  "in_stated_range\n";
        const int Nb = static_cast<int>(std::floor(std::log(T_bridge)));
        for (double x : xs) {
            if (!(x > 0) || !(x < Nb)) continue;
            const BridgeReport br = bridge_compare(
                T_bridge, x, zp, n, child_seed(seed, 0xb71d6eull));
            bridge << fmt18(br.T) << "," << fmt18(br.x) << "," << br.N << ","
                   << fmt18(br.sigma) << "," << fmt18(br.zeta_fraction) << ","
                   << fmt18(br.rmt_fraction) << "," << fmt18(br.rmt_stderr)
                   << "," << fmt18(br.ratio) << ","
                   << (br.in_stated_range ? 1 : 0) << "\n";
        }
    }
    return 0;
}

// A tiny CSV reader for the report: skips "#" comment lines, returns rows of
// string fields. Fields never contain commas in our own outputs.
std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        rows.push_back(std::move(fields));
    }
    return rows;
}

int run_report(const RunConfig& cfg, const std::string& label) {
    const fs::path out_root(cfg.out_dir);
    struct Input {
        const char* rel;
        fs::path path;
    };
    std::vector<Input> inputs{
        {"counts/<label>/berndt.csv", out_root / "counts" / label / "berndt.csv"},
        {"counts/<label>/sigma_counts.csv",
         out_root / "counts" / label / "sigma_counts.csv"},
        {"littlewood/<label>/identities.csv",
         out_root / "littlewood" / label / "identities.csv"},
        {"littlewood/<label>/theorems.csv",
         out_root / "littlewood" / label / "theorems.csv"},
        {"dist/<label>/summary.json", out_root / "dist" / label / "summary.json"},
        {"rmt/<label>/radial.csv", out_root / "rmt" / label / "radial.csv"},
        {"rmt/<label>/small_x.csv", out_root / "rmt" / label / "small_x.csv"},
    };
    std::vector<std::string> missing;
    for (const Input& i : inputs)
        if (!fs::exists(i.path)) missing.push_back(i.rel);
    if (!missing.empty()) {
        std::cerr << "report: missing prerequisites:\n";
        for (const std::string& m : missing)
            std::cerr << "  " << m
                      << "  (produce it with the matching subcommand)\n";
        return 3;
    }

    std::ofstream md = open_output(cfg, "report", label, "report.md");
    std::ofstream sum = open_output(cfg, "report", label, "summary.csv");
    sum << "section,metric,value\n";
    md << "# zeta' zero statistics: reproduction summary\n\n";

    {
        md << "## Zero counts against the smooth main term\n\n";
        md << "| T | observed | predicted | residual | band | within |\n";
        md << "|---|----------|-----------|----------|------|--------|\n";
        double worst = 0;
        bool all = true;
        for (auto& r : read_csv(inputs[0].path)) {
            if (r[0] == "T") continue;
            md << "| " << std::stod(r[0]) << " | " << r[1] << " | "
               << std::stod(r[2]) << " | " << std::stod(r[3]) << " | "
               << std::stod(r[4]) << " | " << r[5] << " |\n";
            worst = std::max(worst,
                             std::abs(std::stod(r[3])) /
                                 std::log(std::stod(r[0])));
            all = all && r[5] == "1";
        }
        md << "\nWorst |residual|/log T = " << worst << ", all within band: "
           << (all ? "yes" : "no") << "\n\n";
        sum << "counts,worst_residual_over_logT," << fmt18(worst) << "\n";
        sum << "counts,all_within_band," << (all ? 1 : 0) << "\n";
    }
    {
        md << "## Littlewood-style identities\n\n";
        md << "| fn | sigma | T | residual | band |\n";
        md << "|----|-------|---|----------|------|\n";
        double worst = 0;
        for (auto& r : read_csv(inputs[2].path)) {
            if (r[0] == "fn") continue;
            md << "| " << r[0] << " | " << std::stod(r[1]) << " | "
               << std::stod(r[2]) << " | " << std::stod(r[6]) << " | "
               << std::stod(r[7]) << " |\n";
            worst = std::max(worst,
                             std::abs(std::stod(r[6])) / std::stod(r[7]));
        }
        md << "\nWorst |residual|/band = " << worst << "\n\n";
        sum << "littlewood,worst_residual_over_band," << fmt18(worst) << "\n";

        md << "## Asymptotic comparisons (informational at this scale)\n\n";
        md << "| comparison | sigma | T | residual/T | E | in range |\n";
        md << "|------------|-------|---|------------|---|----------|\n";
        for (auto& r : read_csv(inputs[3].path)) {
            if (r[0] == "comparison") continue;
            md << "| " << r[0] << " | " << std::stod(r[1]) << " | "
               << std::stod(r[2]) << " | " << std::stod(r[6]) << " | "
               << std::stod(r[7]) << " | " << r[8] << " |\n";
        }
        md << "\n";
    }
    {
        std::ifstream in(inputs[4].path);
        nlohmann::json j;
        in >> j;
        md << "## Normalized |zeta'/zeta| against the Gaussian law\n\n";
        md << "At sigma = " << j["sigma"].get<double>() << ", T = "
           << j["T"].get<double>() << ", n = " << j["n"].get<long>()
           << ": sup gap between the empirical CDF and 1 - exp(-r^2/2) = "
           << j["sup_gap"].get<double>() << " with "
           << j["n_excluded"].get<long>() << " excluded samples.\n\n";
        sum << "dist,sup_gap," << fmt18(j["sup_gap"].get<double>()) << "\n";
    }
    {
        md << "## CUE derivative-zero radial laws\n\n";
        md << "| N | x | mean fraction | reference | ratio |\n";
        md << "|---|---|---------------|-----------|-------|\n";
        double worst_radial = 0;
        for (auto& r : read_csv(inputs[5].path)) {
            if (r[0] == "N") continue;
            md << "| " << r[0] << " | " << std::stod(r[1]) << " | "
               << std::stod(r[2]) << " | " << std::stod(r[4]) << " | "
               << std::stod(r[5]) << " |\n";
            worst_radial = std::max(worst_radial,
                                    std::abs(std::stod(r[5]) - 1.0));
        }
        md << "\n| N | nu | mean fraction | reference | ratio |\n";
        md << "|---|----|---------------|-----------|-------|\n";
        double worst_small = 0;
        for (auto& r : read_csv(inputs[6].path)) {
            if (r[0] == "N") continue;
            md << "| " << r[0] << " | " << std::stod(r[1]) << " | "
               << std::stod(r[2]) << " | " << std::stod(r[4]) << " | "
               << std::stod(r[5]) << " |\n";
            worst_small = std::max(worst_small,
                                   std::abs(std::stod(r[5]) - 1.0));
        }
        md << "\nWorst |ratio - 1|: radial " << worst_radial << ", small-x "
           << worst_small << "\n";
        sum << "rmt,worst_radial_ratio_gap," << fmt18(worst_radial) << "\n";
        sum << "rmt,worst_small_x_ratio_gap," << fmt18(worst_small) << "\n";
    }
    std::cout << "report: written to "
              << (out_root / "report" / label).string() << "\n";
    return 0;
}

const char* numerics_kind(const NumericsError& e) {
    if (dynamic_cast<const PoleProximity*>(&e)) return "PoleProximity";
    if (dynamic_cast<const ToleranceUnreachable*>(&e))
        return "ToleranceUnreachable";
    if (dynamic_cast<const NearSingularity*>(&e)) return "NearSingularity";
    if (dynamic_cast<const TailBoundFailure*>(&e)) return "TailBoundFailure";
    if (dynamic_cast<const BoundaryZero*>(&e)) return "BoundaryZero";
    if (dynamic_cast<const CountMismatch*>(&e)) return "CountMismatch";
    if (dynamic_cast<const RootVerificationFailure*>(&e))
        return "RootVerificationFailure";
    return "NumericsError";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeros of zeta' in the critical strip: location, counting, "
                 "value statistics, and CUE comparisons"};
    app.set_version_flag("--version", kCodeVersion);
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string config_path, out_dir, cache_dir, label = "default";
    std::uint64_t seed = 0;
    int jobs = 0;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--cache", cache_dir, "cache directory");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--jobs", jobs, "parallelism degree");
    app.add_option("--label", label, "output subdirectory label");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one function");
    std::string eval_fn = "zeta", eval_s;
    double eval_tol = 0;
    eval_cmd->add_option("--fn", eval_fn, "zeta|zetap|zetapp|logderiv");
    eval_cmd->add_option("--s", eval_s, "point, e.g. 0.75+100i")->required();
    eval_cmd->add_option("--tol", eval_tol, "accuracy target");

    auto* zeros_cmd = app.add_subcommand("zeros", "locate and cache zeros");
    std::string zeros_fn = "zetap";
    double zeros_T = -1;
    zeros_cmd->add_option("--fn", zeros_fn, "zeta|zetap");
    zeros_cmd->add_option("--T", zeros_T, "height to cover");

    auto* counts_cmd =
        app.add_subcommand("counts", "zero counts against predictions");
    double counts_T = -1;
    std::vector<double> counts_sigmas{0.6, 0.7, 0.75, 0.8, 0.9, 1.0, 1.25,
                                      1.5};
    counts_cmd->add_option("--T", counts_T, "height");
    counts_cmd->add_option("--sigma", counts_sigmas, "sigma grid");

    auto* lw_cmd =
        app.add_subcommand("littlewood", "log integrals vs zero sums");
    std::vector<double> lw_sigmas{0.75, 1.0, 1.5};
    std::vector<double> lw_Ts{200.0};
    lw_cmd->add_option("--sigma", lw_sigmas, "sigma list");
    lw_cmd->add_option("--T", lw_Ts, "T list");

    auto* dist_cmd =
        app.add_subcommand("dist", "value distribution of zeta'/zeta");
    double dist_sigma = 0.75, dist_T = -1, dist_rmax = 4.0;
    int dist_n = 20000;
    bool dist_second = false;
    dist_cmd->add_option("--sigma", dist_sigma, "real part");
    dist_cmd->add_option("--T", dist_T, "height");
    dist_cmd->add_option("--n", dist_n, "sample count");
    dist_cmd->add_option("--r-max", dist_rmax, "CDF grid upper end");
    dist_cmd->add_flag("--second-moment", dist_second,
                       "also integrate (log|zeta'/zeta|)^2 (slow)");

    auto* rmt_cmd = app.add_subcommand("rmt", "CUE derivative-zero laws");
    std::vector<int> rmt_Ns{64, 128, 256};
    std::vector<double> rmt_xs{4, 8, 16};
    std::vector<double> rmt_nus{0.05, 0.1, 0.2};
    long rmt_n = 4000;
    double rmt_T = -1;
    rmt_cmd->add_option("--N", rmt_Ns, "matrix sizes");
    rmt_cmd->add_option("--x", rmt_xs, "radial thresholds");
    rmt_cmd->add_option("--nu", rmt_nus, "small-x thresholds");
    rmt_cmd->add_option("--n", rmt_n, "samples per N");
    rmt_cmd->add_option("--T", rmt_T,
                        "also emit the zeta comparison at this height");

    auto* report_cmd =
        app.add_subcommand("report", "assemble summary from prior runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg;
        if (config_path.empty())
            if (const char* v = std::getenv("ZETAPRIME_CONFIG"))
                config_path = v;
        if (!config_path.empty()) cfg = config_from_file(config_path, cfg);
        apply_env_overrides(cfg);
        if (app.count("--out")) cfg.out_dir = out_dir;
        if (app.count("--cache")) cfg.cache_dir = cache_dir;
        if (app.count("--seed")) cfg.seed = seed;
        if (app.count("--jobs")) cfg.jobs = jobs;
        validate(cfg);
        if (eval_tol <= 0) eval_tol = cfg.eval_tol;
        if (zeros_T <= 0) zeros_T = cfg.T_max;
        if (counts_T <= 0) counts_T = cfg.T_max;
        if (dist_T <= 0) dist_T = cfg.T_max;

        if (eval_cmd->parsed()) return run_eval(eval_fn, eval_s, eval_tol);
        if (zeros_cmd->parsed()) {
            if (zeros_fn != "zeta" && zeros_fn != "zetap") {
                std::cerr << "zeros: unknown --fn \"" << zeros_fn << "\"\n";
                return 2;
            }
            return run_zeros(cfg, zeros_fn == "zetap" ? "zeta_prime" : "zeta",
                             zeros_T, label);
        }
        if (counts_cmd->parsed())
            return run_counts(cfg, counts_T, counts_sigmas, label);
        if (lw_cmd->parsed())
            return run_littlewood(cfg, lw_sigmas, lw_Ts, label);
        if (dist_cmd->parsed())
            return run_dist(cfg, dist_sigma, dist_T, dist_n, cfg.seed,
                            dist_second, dist_rmax, label);
        if (rmt_cmd->parsed())
            return run_rmt(cfg, rmt_Ns, rmt_xs, rmt_nus, rmt_n, cfg.seed,
                           rmt_T, label);
        if (report_cmd->parsed()) return run_report(cfg, label);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const CacheVersionMismatch& e) {
        std::cerr << "cache: " << e.what()
                  << "\nthe cached table is unusable with this build; delete "
                     "it (or point --cache elsewhere) and rerun the zeros "
                     "subcommand to rebuild\n";
        return 3;
    } catch (const MalformedTable& e) {
        std::cerr << "cache: " << e.what()
                  << "\ndelete the damaged file and rerun the zeros "
                     "subcommand to rebuild\n";
        return 3;
    } catch (const InsufficientCoverage& e) {
        std::cerr << "missing prerequisite: " << e.what() << "\n";
        return 3;
    } catch (const NumericsError& e) {
        nlohmann::ordered_json j;
        j["error"] = numerics_kind(e);
        j["what"] = e.what();
        std::cout << j.dump() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
