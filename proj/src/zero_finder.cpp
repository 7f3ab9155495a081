// SPDX-License-Identifier: Apache-2.0
#include "zetaprime/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "zetaprime/errors.hpp"
#include "zetaprime/eval.hpp"
#include "zetaprime/rng.hpp"
#include "zetaprime/scalar.hpp"
#include "zetaprime/theta.hpp"
#include "zetaprime/version.hpp"

namespace zetaprime {
namespace {

constexpr double kPi = 3.14159265358979323846;
// wider than the defaults so the excluded band sigma in [-2,-1] is walkable
const EvalLimits kFinderLimits{-2.5, 4.5, 5100.0};
constexpr double kSweepBottom = 0.05;
constexpr double kWindowHeight = 10.0;
constexpr double kZetaScanStart = 2.0;

const char* target_name(TargetFunction fn) {
    return fn == TargetFunction::zeta ? "zeta" : "zeta_prime";
}

struct Adapter {
    TargetFunction fn;

    ComplexValueWithError value(double sigma, double t, double tol) const {
        ComplexValueWithError d[3];
        const int order = fn == TargetFunction::zeta ? 0 : 1;
        eval_zeta_derivatives({sigma, t}, tol, order, d, kFinderLimits);
        return d[order];
    }

    void pair(double sigma, double t, double tol, ComplexValueWithError& f,
              ComplexValueWithError& fp) const {
        ComplexValueWithError d[3];
        const int order = fn == TargetFunction::zeta ? 1 : 2;
        eval_zeta_derivatives({sigma, t}, tol, order, d, kFinderLimits);
        f = d[order - 1];
        fp = d[order];
    }

    int pole_order() const { return fn == TargetFunction::zeta ? 1 : 2; }
};

std::string point_str(double sigma, double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.6g, %.6g)", sigma, t);
    return buf;
}

template <class Eval>
struct EdgeWalker {
    const Eval& A;
    double eval_tol;
    double guard_factor;

    std::complex<double> guarded(double sigma, double t) const {
        const ComplexValueWithError v = A.value(sigma, t, eval_tol);
        if (std::abs(v.value) < guard_factor * v.abs_error + 1e-13)
            throw BoundaryZero("winding: |f| below the contour guard at " +
                               point_str(sigma, t));
        return v.value;
    }

    // Argument change of f along the path at(u), u in [0,1]. Each accepted
    // step contributes well under pi/2; on top of that the step length is
    // held near 0.5 / (a priori phase speed), because the threshold alone
    // cannot see a change that exceeds a full turn. For zeta and zeta' in
    // the strip the phase speed per unit of arc length stays within a small
    // multiple of log t plus a pole term of order / distance when the path
    // runs near s = 1, so aliasing a turn would need a tenfold breach of
    // the model; a zero close enough to the contour to cause one swings the
    // argument by at most pi and trips the adaptive halving first.
    template <class Path>
    double walk_path(Path at, double len, double t_max,
                     double pole_dist) const {
        double speed = 2.0 + 1.8 * std::log(2.0 + t_max / 6.283);
        if (A.pole_order() > 0)
            speed += A.pole_order() / std::max(pole_dist, 1e-3);
        const double du_init = std::min(0.125, 0.5 / (len * speed));
        const double du_max = std::min(0.125, 8.0 * du_init);
        KahanSum<double> acc;
        StripPoint p = at(0.0);
        std::complex<double> f0 = guarded(p.sigma, p.t);
        double u = 0.0, du = du_init;
        long steps = 0;
        while (u < 1.0) {
            du = std::min(du, 1.0 - u);
            double darg;
            std::complex<double> f1;
            for (;;) {
                p = at(u + du);
                f1 = guarded(p.sigma, p.t);
                darg = std::arg(f1 / f0);
                if (std::abs(darg) <= 1.2) break;
                du *= 0.5;
                if (du < 1e-10)
                    throw NumericsError(
                        "winding: step underflow while resolving the argument "
                        "change near " +
                        point_str(p.sigma, p.t));
            }
            acc.add(darg);
            u += du;
            f0 = f1;
            if (++steps > 500000)
                throw NumericsError("winding: step budget exhausted");
            du = std::min(du * 1.7, du_max);
        }
        return acc.sum;
    }

    // distance from the segment to the pole at s = 1
    static double segment_pole_dist(double sig0, double t0, double sig1,
                                    double t1) {
        const double dx = sig1 - sig0, dy = t1 - t0;
        const double px = 1.0 - sig0, py = -t0;
        const double len2 = dx * dx + dy * dy;
        double u = len2 > 0 ? (px * dx + py * dy) / len2 : 0.0;
        u = std::clamp(u, 0.0, 1.0);
        return std::hypot(px - u * dx, py - u * dy);
    }

    double walk(double sig0, double t0, double sig1, double t1) const {
        const double len = std::hypot(sig1 - sig0, t1 - t0);
        const double t_max = std::max(std::abs(t0), std::abs(t1));
        return walk_path(
            [=](double u) {
                return StripPoint{sig0 + u * (sig1 - sig0),
                                  t0 + u * (t1 - t0)};
            },
            len, t_max, segment_pole_dist(sig0, t0, sig1, t1));
    }

    // bottom edge on the real axis passing the pole at s = 1: indent by an
    // upper semicircle of radius rad, leaving the pole outside the contour
    double walk_indented_bottom(double sig0, double sig1, double rad) const {
        double total = 0;
        total += walk(sig0, 0.0, 1.0 - rad, 0.0);
        total += walk_path(
            [=](double u) {
                const double phi = kPi * (1.0 - u);
                return StripPoint{1.0 + rad * std::cos(phi),
                                  rad * std::sin(phi)};
            },
            kPi * rad, rad, rad);
        total += walk(1.0 + rad, 0.0, sig1, 0.0);
        return total;
    }
};

void validate_rect(const Rect& r) {
    if (!(r.sigma_lo < r.sigma_hi) || !(r.t_lo < r.t_hi))
        throw std::invalid_argument("winding: rectangle is empty or inverted");
    if (r.sigma_lo < kFinderLimits.sigma_lo ||
        r.sigma_hi > kFinderLimits.sigma_hi ||
        std::max(std::abs(r.t_lo), std::abs(r.t_hi)) > kFinderLimits.t_abs_max)
        throw std::domain_error(
            "winding: rectangle outside the supported strip");
}

template <class Eval>
int winding_count(const Eval& A, const Rect& r, double eval_tol,
                  double guard_factor) {
    const EdgeWalker<Eval> walker{A, eval_tol, guard_factor};
    const bool has_pole = A.pole_order() > 0;
    const bool pole_inside = has_pole && r.sigma_lo < 1.0 &&
                             1.0 < r.sigma_hi && r.t_lo < 0.0 && 0.0 < r.t_hi;
    const bool pole_on_bottom =
        has_pole && r.t_lo == 0.0 && r.sigma_lo < 1.0 && 1.0 < r.sigma_hi;
    double total = 0;
    if (pole_on_bottom) {
        const double rad =
            std::min({0.02, 0.25 * (1.0 - r.sigma_lo),
                      0.25 * (r.sigma_hi - 1.0), 0.25 * r.t_hi});
        total += walker.walk_indented_bottom(r.sigma_lo, r.sigma_hi, rad);
    } else {
        total += walker.walk(r.sigma_lo, r.t_lo, r.sigma_hi, r.t_lo);
    }
    total += walker.walk(r.sigma_hi, r.t_lo, r.sigma_hi, r.t_hi);
    total += walker.walk(r.sigma_hi, r.t_hi, r.sigma_lo, r.t_hi);
    total += walker.walk(r.sigma_lo, r.t_hi, r.sigma_lo, r.t_lo);
    const double cycles = total / (2.0 * kPi);
    const long n = std::lround(cycles);
    if (std::abs(cycles - n) > 0.05) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "winding: boundary argument change %.6f cycles is not "
                      "an integer",
                      cycles);
        throw CountMismatch(buf);
    }
    int count = static_cast<int>(n);
    if (pole_inside) count += A.pole_order(); // walk measured zeros - poles
    if (count < 0)
        throw CountMismatch("winding: negative zero count after pole "
                            "compensation");
    return count;
}

struct Search {
    Adapter A;
    ZeroSearchOptions opt;
    std::vector<ZeroRecord>* out;

    double certify_tol() const {
        return std::max(opt.refine_tol * 0.5, 1.25e-10);
    }

    int winding(const Rect& r) const {
        return winding_count(A, r, opt.eval_tol, 16.0);
    }

    std::uint64_t cell_key(const Rect& r, int depth, int retry) const {
        std::uint64_t h = splitmix64(opt.seed ^ 0x6b8b4567327b23c6ull);
        auto mix = [&h](double x) { h = fnv1a(&x, sizeof x, h); };
        mix(r.sigma_lo);
        mix(r.sigma_hi);
        mix(r.t_lo);
        mix(r.t_hi);
        h = fnv1a(&depth, sizeof depth, h);
        h = fnv1a(&retry, sizeof retry, h);
        return h;
    }

    void solve(const Rect& r, int w, int depth) {
        if (w == 0) return;
        const double diam = std::hypot(r.sigma_hi - r.sigma_lo,
                                       r.t_hi - r.t_lo);
        if (w == 1) {
            if (auto rec = newton(r)) {
                out->push_back(*rec);
                return;
            }
        }
        if (diam <= opt.min_cell) {
            if (w == 1)
                throw RootVerificationFailure(
                    "find_zeros: Newton kept escaping a minimum-size cell "
                    "near " +
                    point_str(0.5 * (r.sigma_lo + r.sigma_hi),
                              0.5 * (r.t_lo + r.t_hi)));
            ZeroRecord rec;
            rec.beta = 0.5 * (r.sigma_lo + r.sigma_hi);
            rec.gamma = 0.5 * (r.t_lo + r.t_hi);
            rec.residual = diam;
            rec.newton_error = diam;
            rec.multiplicity = w; // unresolved cluster, flagged, kept
            out->push_back(rec);
            return;
        }
        quadrisect(r, w, depth);
    }

    void quadrisect(const Rect& r, int w, int depth) {
        for (int retry = 0; retry < 9; ++retry) {
            std::mt19937_64 g(cell_key(r, depth, retry));
            const double us = (uniform01(g) - 0.5) * 0.4;
            const double ut = (uniform01(g) - 0.5) * 0.4;
            const double sm =
                0.5 * (r.sigma_lo + r.sigma_hi) + us * (r.sigma_hi - r.sigma_lo);
            const double tm = 0.5 * (r.t_lo + r.t_hi) + ut * (r.t_hi - r.t_lo);
            const Rect child[4] = {{r.sigma_lo, sm, r.t_lo, tm},
                                   {sm, r.sigma_hi, r.t_lo, tm},
                                   {r.sigma_lo, sm, tm, r.t_hi},
                                   {sm, r.sigma_hi, tm, r.t_hi}};
            int cw[4];
            int sum = 0;
            try {
                for (int i = 0; i < 4; ++i) {
                    cw[i] = winding(child[i]);
                    sum += cw[i];
                }
            } catch (const BoundaryZero&) {
                continue; // split line touched a zero; jitter and redraw
            }
            if (sum != w) {
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "subdivision: children sum to %d, parent holds "
                              "%d",
                              sum, w);
                throw CountMismatch(buf);
            }
            for (int i = 0; i < 4; ++i) solve(child[i], cw[i], depth + 1);
            return;
        }
        throw BoundaryZero(
            "subdivision: no split line clear of zeros after 9 draws");
    }

    std::optional<ZeroRecord> newton(const Rect& cell) const {
        const double ds = cell.sigma_hi - cell.sigma_lo;
        const double dt = cell.t_hi - cell.t_lo;
        const double halo = 1e-3 * std::hypot(ds, dt) + 1e-9;
        double cs = 0.5 * (cell.sigma_lo + cell.sigma_hi);
        double ct = 0.5 * (cell.t_lo + cell.t_hi);
        double last_step = std::hypot(ds, dt);
        double tol_now = opt.eval_tol;
        for (int it = 0; it < 40; ++it) {
            ComplexValueWithError f, fp;
            A.pair(cs, ct, tol_now, f, fp);
            if (tol_now == certify_tol()) {
                const double bound = std::abs(f.value) + f.abs_error;
                if (bound <= opt.refine_tol) {
                    ZeroRecord rec;
                    rec.beta = cs;
                    rec.gamma = ct;
                    rec.residual = bound;
                    rec.newton_error = last_step;
                    rec.multiplicity = 1;
                    return rec;
                }
            }
            if (std::abs(fp.value) <= 8.0 * fp.abs_error)
                return std::nullopt; // derivative too uncertain; subdivide
            const std::complex<double> step = f.value / fp.value;
            cs -= step.real();
            ct -= step.imag();
            last_step = std::abs(step);
            if (cs < cell.sigma_lo - halo || cs > cell.sigma_hi + halo ||
                ct < cell.t_lo - halo || ct > cell.t_hi + halo)
                return std::nullopt; // left the owning cell; subdivide it
            if (last_step < 1e-5) tol_now = certify_tol();
        }
        return std::nullopt;
    }
};

// deterministic edge jitter keyed to the nominal grid height, so resumed and
// fresh sweeps lay down identical windows
double drawn_edge(std::uint64_t seed, double nominal, int retry) {
    std::mt19937_64 g(child_seed(
        seed, 0x9e3779b97f4a7c15ull ^
                  static_cast<std::uint64_t>(std::llround(nominal * 1024.0)) ^
                  (static_cast<std::uint64_t>(retry) << 48)));
    return nominal + 0.05 + 0.3 * uniform01(g);
}

double validated_edge(const Adapter& A, std::uint64_t seed, double nominal,
                      double eval_tol, int retry_base) {
    for (int retry = retry_base; retry < retry_base + 8; ++retry) {
        const double h = drawn_edge(seed, nominal, retry);
        double lo = 1e300;
        for (int i = 0; i <= 25; ++i)
            lo = std::min(lo, std::abs(A.value(-1.0 + 0.2 * i, h,
                                               eval_tol * 1e3)
                                           .value));
        if (lo > 3e-3) return h;
    }
    throw BoundaryZero("sweep: no clear horizontal edge near nominal height " +
                       std::to_string(nominal));
}

// zeta' is real and bounded away from zero on the real segment of the strip;
// a scan just above the axis guards the uncovered sliver below the first
// window bottom
void assert_axis_clear(const Adapter& A, double eval_tol) {
    for (int i = 0; i <= 50; ++i) {
        const double sigma = -1.0 + 0.1 * i;
        if (std::abs(sigma - 1.0) < 0.15) continue; // pole neighborhood
        const double m =
            std::abs(A.value(sigma, 0.5 * kSweepBottom, eval_tol * 1e3).value);
        if (m < 0.02)
            throw CountMismatch(
                "sweep: unexpected near-zero of zeta' just above the real "
                "axis at sigma = " +
                std::to_string(sigma));
    }
}

std::vector<ZeroRecord> sweep_prime_windows(double bottom, double T,
                                            const ZeroSearchOptions& opt,
                                            double* top_out) {
    const Adapter A{TargetFunction::zeta_prime};
    std::vector<ZeroRecord> found;
    double cur = bottom;
    int k = static_cast<int>(std::floor(cur / kWindowHeight)) + 1;
    while (cur < T) {
        const double nominal = k * kWindowHeight;
        if (nominal <= cur + 1.0) {
            ++k;
            continue;
        }
        bool done = false;
        for (int redraw = 0; redraw < 4 && !done; ++redraw) {
            const double top = validated_edge(A, opt.seed, nominal,
                                              opt.eval_tol, 8 * redraw);
            const Rect window{-1.0, 4.0, cur, top};
            try {
                if (opt.check_left_band) {
                    const Rect band{-2.0, -1.0, cur, top};
                    const int bw =
                        winding_count(A, band, opt.eval_tol, 16.0);
                    if (bw != 0)
                        throw CountMismatch(
                            "sweep: zeta' zeros found left of sigma = -1 in "
                            "a window believed clear");
                }
                Search search{A, opt, nullptr};
                std::vector<ZeroRecord> recs;
                search.out = &recs;
                const int w = search.winding(window);
                search.solve(window, w, 0);
                found.insert(found.end(), recs.begin(), recs.end());
                cur = top;
                done = true;
            } catch (const BoundaryZero&) {
                if (redraw == 3) throw;
            }
        }
        ++k;
    }
    *top_out = cur;
    std::sort(found.begin(), found.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) {
                  return a.gamma < b.gamma;
              });
    return found;
}

double hardy_step(double t) {
    const double density = std::max(rs_theta_deriv(std::max(t, 10.0)), 0.5);
    return std::min(std::max(kPi / (10.0 * density), 0.01), 0.3);
}

ZeroRecord refine_line_zero(double a, double b, double za,
                            const ZeroSearchOptions& opt) {
    const double certify = std::max(opt.refine_tol * 0.5, 1.25e-10);
    for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
        const double m = 0.5 * (a + b);
        const double zm = hardy_Z(m, opt.eval_tol).value;
        if ((za < 0) == (zm < 0)) {
            a = m;
            za = zm;
        } else {
            b = m;
        }
    }
    double t = 0.5 * (a + b);
    double last_step = b - a;
    for (int it = 0; it < 8; ++it) {
        const HardyPair hp = hardy_Z_pair(t, certify);
        const double bound = std::abs(hp.z) + hp.z_error;
        if (bound <= opt.refine_tol) {
            ZeroRecord rec;
            rec.beta = 0.5;
            rec.gamma = t;
            rec.residual = bound;
            rec.newton_error = last_step;
            rec.multiplicity = 1;
            return rec;
        }
        if (std::abs(hp.z_deriv) <= 8.0 * hp.z_deriv_error)
            throw RootVerificationFailure(
                "zeta line scan: Z' vanishes at a located sign change near "
                "t = " +
                std::to_string(t));
        last_step = hp.z / hp.z_deriv;
        t -= last_step;
        last_step = std::abs(last_step);
    }
    throw RootVerificationFailure(
        "zeta line scan: residual would not certify below refine_tol near "
        "t = " +
        std::to_string(t));
}

std::vector<ZeroRecord> scan_zeta_line(double bottom, double T,
                                       const ZeroSearchOptions& opt,
                                       double* top_out) {
    // settle a top edge where |Z| is comfortably nonzero
    std::mt19937_64 g(child_seed(opt.seed, 1807));
    double top = T + 0.5 + 0.25 * uniform01(g);
    bool top_ok = false;
    for (int nudge = 0; nudge < 12 && !top_ok; ++nudge) {
        top_ok = std::abs(hardy_Z(top, opt.eval_tol).value) >= 0.05;
        if (!top_ok) top += 0.07;
    }
    if (!top_ok)
        throw BoundaryZero(
            "zeta line scan: no comfortable top edge found above T");

    std::vector<ZeroRecord> found;
    double t0 = bottom;
    double z0 = hardy_Z(t0, opt.eval_tol).value;
    while (t0 < top) {
        double t1 = std::min(t0 + hardy_step(t0), top);
        double z1 = hardy_Z(t1, opt.eval_tol).value;
        for (int nudge = 0; nudge < 3 && t1 < top && std::abs(z1) < 1e-10;
             ++nudge) {
            t1 = std::min(t1 + 0.003, top);
            z1 = hardy_Z(t1, opt.eval_tol).value;
        }
        if ((z0 < 0) != (z1 < 0))
            found.push_back(refine_line_zero(t0, t1, z0, opt));
        t0 = t1;
        z0 = z1;
    }

    // fresh scans start at 2 with nothing below; the winding rectangle then
    // starts at 1. A resumed scan must start exactly at the previous top so
    // no zero is counted twice.
    const Adapter A{TargetFunction::zeta};
    const double check_lo = bottom <= kZetaScanStart + 1e-9 ? 1.0 : bottom;
    const Rect check{0.0, 1.0, check_lo, top};
    const int w = winding_count(A, check, opt.eval_tol, 16.0);
    if (w != static_cast<int>(found.size())) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "zeta line scan: %zu sign-change zeros but winding %d "
                      "on [0,1]x[%.3f,%.3f]",
                      found.size(), w, check.t_lo, check.t_hi);
        throw CountMismatch(buf);
    }
    *top_out = top;
    return found;
}

ZeroTable make_table(TargetFunction fn, double t_lo, double t_hi,
                     const ZeroSearchOptions& opt,
                     std::vector<ZeroRecord> records) {
    ZeroTable table;
    table.function = target_name(fn);
    table.t_lo = t_lo;
    table.t_hi = t_hi;
    table.eval_tol = opt.eval_tol;
    table.refine_tol = opt.refine_tol;
    table.code_version = kCodeVersion;
    table.records = std::move(records);
    return table;
}

void revalidate_records(const ZeroTable& table) {
    const Adapter A{table.function == "zeta" ? TargetFunction::zeta
                                             : TargetFunction::zeta_prime};
    const double tol = std::max(table.refine_tol * 0.5, 1.25e-10);
    for (const ZeroRecord& r : table.records) {
        if (r.multiplicity != 1) continue; // flagged clusters carry no residual claim
        const ComplexValueWithError v = A.value(r.beta, r.gamma, tol);
        if (std::abs(v.value) - v.abs_error > table.refine_tol)
            throw RootVerificationFailure(
                "zero table: stored record fails residual re-validation at "
                "gamma = " +
                std::to_string(r.gamma));
    }
}

std::filesystem::path table_path(const std::filesystem::path& cache_dir,
                                 TargetFunction fn, double T) {
    char label[40];
    std::snprintf(label, sizeof label, "%.10g", T);
    return cache_dir / "zeros" / target_name(fn) /
           (std::string(label) + ".table");
}

} // namespace

int winding_number(TargetFunction fn, const Rect& rect,
                   const WindingOptions& opt) {
    validate_rect(rect);
    if (!(opt.eval_tol > 0))
        throw std::invalid_argument("winding: eval_tol must be > 0");
    const Adapter A{fn};
    return winding_count(A, rect, opt.eval_tol, opt.guard_factor);
}

namespace {
struct PlainFn {
    const std::function<std::complex<double>(std::complex<double>)>& f;
    ComplexValueWithError value(double sigma, double t, double) const {
        return {f({sigma, t}), 0.0};
    }
    int pole_order() const { return 0; }
};
} // namespace

int winding_number(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const Rect& rect, double eval_tol) {
    if (!(rect.sigma_lo < rect.sigma_hi) || !(rect.t_lo < rect.t_hi))
        throw std::invalid_argument("winding: rectangle is empty or inverted");
    const PlainFn A{f};
    return winding_count(A, rect, eval_tol, 16.0);
}

std::vector<ZeroRecord> find_zeros(TargetFunction fn, const Rect& rect,
                                   const ZeroSearchOptions& opt) {
    validate_rect(rect);
    const Adapter A{fn};
    Search search{A, opt, nullptr};
    std::vector<ZeroRecord> records;
    search.out = &records;
    const int w = search.winding(rect);
    search.solve(rect, w, 0);
    std::sort(records.begin(), records.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) {
                  return a.gamma < b.gamma;
              });
    int total = 0;
    for (const auto& r : records) total += r.multiplicity;
    if (total != w)
        throw CountMismatch(
            "find_zeros: refined records do not add up to the rectangle "
            "winding");
    return records;
}

ZeroTable zeta_prime_zeros_up_to(double T, const ZeroSearchOptions& opt) {
    if (!(T >= 1.0) || T > 5000.0)
        throw std::invalid_argument(
            "zeta_prime_zeros_up_to: T must lie in [1, 5000]");
    const Adapter A{TargetFunction::zeta_prime};
    assert_axis_clear(A, opt.eval_tol);
    double top = 0;
    auto records = sweep_prime_windows(kSweepBottom, T, opt, &top);
    return make_table(TargetFunction::zeta_prime, kSweepBottom, top, opt,
                      std::move(records));
}

ZeroTable zeta_zeros_up_to(double T, const ZeroSearchOptions& opt) {
    if (!(T >= 3.0) || T > 5000.0)
        throw std::invalid_argument(
            "zeta_zeros_up_to: T must lie in [3, 5000]");
    double top = 0;
    auto records = scan_zeta_line(kZetaScanStart, T, opt, &top);
    return make_table(TargetFunction::zeta, kZetaScanStart, top, opt,
                      std::move(records));
}

ZeroTable cached_zeros_up_to(TargetFunction fn, double T,
                             const std::filesystem::path& cache_dir,
                             const ZeroSearchOptions& opt) {
    const std::filesystem::path path = table_path(cache_dir, fn, T);
    std::filesystem::create_directories(path.parent_path());

    auto check_compatible = [&](const ZeroTable& t) {
        if (t.eval_tol != opt.eval_tol || t.refine_tol != opt.refine_tol)
            throw CacheVersionMismatch(
                "zero table cache: stored tolerances differ from the "
                "requested ones; rebuild " +
                path.string());
        if (t.function != target_name(fn))
            throw MalformedTable("zero table cache: function mismatch in " +
                                 path.string());
    };

    if (std::filesystem::exists(path)) {
        ZeroTable t = load_zero_table(path);
        check_compatible(t);
        if (t.t_hi < T)
            throw MalformedTable("zero table cache: stored table does not "
                                 "reach its labeled height");
        revalidate_records(t);
        return t;
    }

    // adopt the tallest compatible shorter table as a resume point
    ZeroTable base;
    bool have_base = false;
    const std::filesystem::path dir = path.parent_path();
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".table") continue;
        ZeroTable t;
        try {
            t = load_zero_table(entry.path());
        } catch (const NumericsError&) {
            continue; // stale or foreign file; ignore for resume purposes
        }
        if (t.function != target_name(fn) || t.eval_tol != opt.eval_tol ||
            t.refine_tol != opt.refine_tol)
            continue;
        if (!have_base || t.t_hi > base.t_hi) {
            base = std::move(t);
            have_base = true;
        }
    }

    ZeroTable result;
    if (have_base && base.t_hi >= T) {
        // already swept past T under another label; restrict to T
        result = base;
        result.t_hi = T;
        result.records.erase(
            std::remove_if(result.records.begin(), result.records.end(),
                           [T](const ZeroRecord& r) { return r.gamma > T; }),
            result.records.end());
    } else if (have_base && fn == TargetFunction::zeta_prime) {
        double top = 0;
        auto more = sweep_prime_windows(base.t_hi, T, opt, &top);
        base.records.insert(base.records.end(), more.begin(), more.end());
        base.t_hi = top;
        result = std::move(base);
    } else if (have_base && fn == TargetFunction::zeta) {
        double top = 0;
        auto more = scan_zeta_line(base.t_hi, T, opt, &top);
        base.records.insert(base.records.end(), more.begin(), more.end());
        base.t_hi = top;
        result = std::move(base);
    } else {
        result = fn == TargetFunction::zeta_prime
                     ? zeta_prime_zeros_up_to(T, opt)
                     : zeta_zeros_up_to(T, opt);
    }
    save_zero_table(result, path);
    return result;
}

} // namespace zetaprime
