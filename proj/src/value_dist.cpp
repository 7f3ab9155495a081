// SPDX-License-Identifier: Apache-2.0

#include "zetaprime/value_dist.hpp"

#include <algorithm>
#include <cmath>

#include "zetaprime/errors.hpp"
#include "zetaprime/eval.hpp"
#include "zetaprime/littlewood.hpp"
#include "zetaprime/mangoldt.hpp"
#include "zetaprime/quadrature.hpp"
#include "zetaprime/rng.hpp"

namespace zetaprime {

SampleSet sample_magnitudes(double sigma, double T, int n,
                            std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_magnitudes: n >= 1");
    if (!(sigma > 0.5) || !(sigma <= 2.0))
        throw std::invalid_argument(
            "sample_magnitudes: sigma must lie in (1/2, 2]");
    SampleSet out;
    out.sigma = sigma;
    out.T = T;
    out.seed = seed;
    out.V = compute_V(sigma, 1e-3).V;
    const double root_v = std::sqrt(out.V);
    out.samples.reserve(n);
    for (int k = 0; k < n; ++k) {
        std::mt19937_64 g(child_seed(seed, static_cast<std::uint64_t>(k)));
        DistributionSample s;
        s.t = uniform01(g) * T;
        try {
            const ComplexValueWithError v =
                eval_log_deriv({sigma, s.t}, 1e-8);
            s.magnitude = std::abs(v.value) / root_v;
        } catch (const NumericsError&) {
            s.excluded = true;
            ++out.n_excluded;
        }
        out.samples.push_back(s);
    }
    return out;
}

namespace {

double fraction_below(const SampleSet& set, double r) {
    long c = 0;
    for (const DistributionSample& s : set.samples)
        if (!s.excluded && s.magnitude <= r) ++c;
    return static_cast<double>(c) / static_cast<double>(set.samples.size());
}

} // namespace

EcdfReport ecdf_vs_gaussian(const SampleSet& set,
                            const std::vector<double>& r_grid) {
    EcdfReport out;
    out.n = static_cast<long>(set.samples.size());
    out.n_excluded = set.n_excluded;
    const double n = static_cast<double>(out.n);
    for (double r : r_grid) {
        EcdfRow row;
        row.r = r;
        row.ecdf = fraction_below(set, r);
        row.gaussian = 1.0 - std::exp(-0.5 * r * r);
        row.gap = row.ecdf - row.gaussian;
        row.stderr_mc = std::sqrt(std::max(
            row.ecdf * (1.0 - row.ecdf) / n, 1.0 / (n * n)));
        out.rows.push_back(row);
    }
    // Kolmogorov-Smirnov sup over the jump points of the empirical CDF.
    // Excluded samples sit at +infinity, so the empirical CDF tops out at
    // (n - n_excluded)/n and the limit gap n_excluded/n competes too.
    std::vector<double> mags;
    for (const DistributionSample& s : set.samples)
        if (!s.excluded) mags.push_back(s.magnitude);
    std::sort(mags.begin(), mags.end());
    double sup = static_cast<double>(out.n_excluded) / n;
    for (std::size_t k = 0; k < mags.size(); ++k) {
        const double F = 1.0 - std::exp(-0.5 * mags[k] * mags[k]);
        const double hi = static_cast<double>(k + 1) / n - F;
        const double lo = F - static_cast<double>(k) / n;
        sup = std::max({sup, hi, lo});
    }
    out.sup_gap = sup;
    return out;
}

Thresholds compute_thresholds(double sigma, double T) {
    Thresholds th;
    th.sigma = sigma;
    th.T = T;
    const double off = 2.0 * sigma - 1.0;
    th.psi = off * std::log(T);
    if (!(th.psi > 1.0))
        throw std::invalid_argument(
            "compute_thresholds: psi = (2 sigma - 1) log T must exceed 1");
    const double V = compute_V(sigma, 1e-3).V;
    const double log_psi = std::log(th.psi);
    th.epsilon = std::max(std::exp(sigma / (1.0 - 2.0 * sigma)) / off,
                          std::exp(10.0) * std::sqrt(log_psi / th.psi));
    th.omega = std::exp(-10.0) *
               std::min(std::pow(V, 1.5), std::sqrt(th.psi / log_psi));
    th.n_cap = kC1 * std::log(T) * std::log(T) / std::sqrt(V);
    // the theorem speaks for r with r * omega >= 1 and r of order 1
    th.in_stated_range = th.omega >= 1.0;
    return th;
}

SmallBallReport small_ball_check(const SampleSet& set, const Thresholds& th) {
    SmallBallReport out;
    out.epsilon = th.epsilon;
    out.in_stated_range = th.epsilon < 1.0;
    const double hi = std::max(1.0, th.epsilon);
    const int steps = 16;
    double max_ratio = 0;
    for (int i = 0; i <= steps; ++i) {
        const double r =
            th.epsilon * std::pow(hi / th.epsilon, double(i) / steps);
        const double ratio = fraction_below(set, r) / (r * r);
        if (i == 0) out.ratio_at_epsilon = ratio;
        max_ratio = std::max(max_ratio, ratio);
    }
    out.max_ratio = max_ratio;
    return out;
}

SecondMomentReport second_moment_check(double sigma, double T, double tol,
                                       const ZeroTable& zeta_zeros,
                                       const ZeroTable& zeta_prime_zeros) {
    if (!(sigma > 0.5))
        throw std::invalid_argument("second_moment_check: sigma > 1/2");
    if (zeta_zeros.t_hi + 1e-12 < T || zeta_prime_zeros.t_hi + 1e-12 < T)
        throw InsufficientCoverage(
            "second_moment_check: tables stop below the requested height");

    std::vector<double> cuts{kIntegralStart, T};
    auto add = [&](const ZeroTable& t) {
        for (const ZeroRecord& r : t.records)
            if (std::abs(r.beta - sigma) <= 0.25 &&
                r.gamma > kIntegralStart + 1e-9 && r.gamma < T - 1e-9)
                cuts.push_back(r.gamma);
    };
    add(zeta_zeros);
    add(zeta_prime_zeros);
    std::sort(cuts.begin(), cuts.end());

    auto integrand = [&](double t) {
        double lg;
        try {
            const ComplexValueWithError v =
                eval_log_deriv({sigma, t}, 1e-8);
            lg = std::log(std::max(std::abs(v.value), 1e-12));
        } catch (const NearSingularity&) {
            // the quotient blew up against a zeta zero; bound its log from
            // the factors, clamping the denominator at the evaluation noise
            // floor (the affected nodes carry negligible weight)
            const ComplexValueWithError zp = eval_zeta_prime({sigma, t}, 1e-9);
            const ComplexValueWithError zz = eval_zeta({sigma, t}, 1e-9);
            lg = std::log(std::max(std::abs(zp.value), 1e-300)) -
                 std::log(std::max(std::abs(zz.value), 1e-9));
        }
        return lg * lg;
    };

    SecondMomentReport out;
    out.sigma = sigma;
    out.T = T;
    const double total = T - kIntegralStart;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-12) continue;
        const double share =
            std::max(tol * (cuts[i + 1] - cuts[i]) / total, 1e-12);
        const QuadratureResult q =
            integrate_tanh_sinh(integrand, cuts[i], cuts[i + 1], share);
        out.value += q.value;
        out.quad_error += q.error_estimate;
    }
    out.ratio = out.value / (T * std::log(T) * std::log(T));
    return out;
}

} // namespace zetaprime
