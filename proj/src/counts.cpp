// SPDX-License-Identifier: Apache-2.0
//
// Counting functions over persisted zero tables. Everything here is exact
// bookkeeping over a finite list of records; the only analysis inputs are
// the main terms and the piecewise error factor, all evaluated in double.

#include "zetaprime/counts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "zetaprime/errors.hpp"

namespace zetaprime {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_coverage(double T, const ZeroTable& table) {
    if (table.t_hi + 1e-12 < T)
        throw InsufficientCoverage(
            "counts: table reaches t = " + std::to_string(table.t_hi) +
            " but the request needs " + std::to_string(T));
}

long count_above(double sigma, double T, const ZeroTable& table) {
    long n = 0;
    for (const ZeroRecord& r : table.records)
        if (r.gamma > 0 && r.gamma <= T && r.beta > sigma)
            n += r.multiplicity;
    return n;
}

} // namespace

double nprime_main_term(double T) {
    const double x = T / kTwoPi;
    return x * std::log(x) - (1.0 + std::log(2.0)) * x;
}

ErrorTermE error_term_E(double psi, double T) {
    if (!(psi > 1.0) || !(T > std::exp(std::exp(1.0))))
        throw std::invalid_argument(
            "error_term_E: needs psi > 1 and log log T > 1");
    const double L = std::log(T);
    const double L2 = std::log(L);
    const double boundary = std::pow(L2, 4.0 / 17.0) * std::pow(L, 14.0 / 17.0);
    ErrorTermE out;
    out.psi = psi;
    out.T = T;
    if (psi <= boundary) {
        out.regime = ErrorTermE::Regime::low;
        out.value = L2 * L2 * L2 * std::pow(L, 1.5) / std::pow(psi, 2.25);
        out.in_stated_range = psi >= std::pow(L, 2.0 / 3.0) * L2;
    } else {
        out.regime = ErrorTermE::Regime::high;
        out.value = L2 * L2 * psi * psi / (L * L);
        out.in_stated_range = psi <= L / (10.0 * L2);
    }
    return out;
}

CountReport count_nprime(double T, const ZeroTable& table, double band_C) {
    if (!(T > 0)) throw std::invalid_argument("count_nprime: T must be > 0");
    require_coverage(T, table);
    CountReport out;
    out.T = T;
    out.observed = count_above(-1e308, T, table);
    out.predicted = nprime_main_term(T);
    out.residual = static_cast<double>(out.observed) - out.predicted;
    out.tolerance_band = band_C * std::log(T);
    out.in_stated_range = true;
    return out;
}

CountReport count_nprime_sigma(double sigma, double T,
                               const ZeroTable& table) {
    if (!(sigma > 0.5))
        throw std::invalid_argument("count_nprime_sigma: sigma must be > 1/2");
    require_coverage(T, table);
    CountReport out;
    out.T = T;
    out.sigma = sigma;
    out.observed = count_above(sigma, T, table);
    out.predicted = T / (kTwoPi * (sigma - 0.5));
    out.residual = static_cast<double>(out.observed) - out.predicted;
    const double psi = (2.0 * sigma - 1.0) * std::log(T);
    const double L = std::log(T);
    const double L2 = std::log(L);
    bool window = false;
    if (psi > 1.0 && T > 16.0) {
        const ErrorTermE E = error_term_E(psi, T);
        out.tolerance_band = out.predicted * std::sqrt(E.value);
        window = (2.0 * sigma - 1.0) >= L2 * L2 / std::cbrt(L) &&
                 (2.0 * sigma - 1.0) <= 1.0 / (20.0 * L2) &&
                 E.in_stated_range;
    } else {
        out.tolerance_band = out.predicted; // no usable E; band is vacuous
    }
    out.in_stated_range = window;
    return out;
}

WeightedSumL weighted_sum_L(double sigma, double T, const ZeroTable& table) {
    require_coverage(T, table);
    WeightedSumL out;
    out.sigma = sigma;
    out.T = T;
    std::vector<double> betas;
    for (const ZeroRecord& r : table.records)
        if (r.gamma > 0 && r.gamma <= T && r.beta > sigma)
            betas.insert(betas.end(), r.multiplicity, r.beta);
    for (double b : betas) out.direct += b - sigma;
    // The count function of u is a step function dropping by one as u
    // crosses each beta; integrating it from sigma upward amounts to the
    // telescoping sum below, accumulated smallest-first.
    std::sort(betas.begin(), betas.end());
    double prev = sigma;
    double integral = 0;
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const double remaining = static_cast<double>(betas.size() - i);
        integral += remaining * (betas[i] - prev);
        prev = betas[i];
    }
    out.integrated = integral;
    return out;
}

SandwichReport sandwich_check(double sigma, double delta, double T,
                              const ZeroTable& table) {
    if (!(delta > 0) || !(delta < (2.0 * sigma - 1.0) / 4.0))
        throw std::invalid_argument(
            "sandwich_check: need 0 < Delta < (2 sigma - 1)/4");
    require_coverage(T, table);

    // Snap to the 2^-50 grid. All betas in a table are below 8, so scaled
    // values fit in 53 bits and every quantity below is exact.
    const double grid = 1125899906842624.0; // 2^50
    auto snap = [&](double x) {
        return static_cast<std::int64_t>(std::llround(x * grid));
    };
    const std::int64_t S = snap(sigma);
    const std::int64_t D = std::max<std::int64_t>(1, snap(delta));

    std::vector<std::int64_t> B;
    for (const ZeroRecord& r : table.records)
        if (r.gamma > 0 && r.gamma <= T)
            B.insert(B.end(), r.multiplicity, snap(r.beta));

    auto L_scaled = [&](std::int64_t s) {
        __int128 acc = 0;
        for (std::int64_t b : B)
            if (b > s) acc += b - s;
        return acc;
    };
    auto N_count = [&](std::int64_t s) {
        long n = 0;
        for (std::int64_t b : B)
            if (b > s) ++n;
        return n;
    };

    const __int128 Ls = L_scaled(S);
    const __int128 Lp = L_scaled(S + D);
    const __int128 Lm = L_scaled(S - D);
    const long n_mid = N_count(S);

    SandwichReport out;
    out.sigma = sigma;
    out.delta = delta;
    out.T = T;
    out.observed = n_mid;
    // Scale-free comparison: L(S)-L(S+D) <= N*D <= L(S-D)-L(S), integers.
    const __int128 nd = static_cast<__int128>(n_mid) * D;
    out.holds = (Ls - Lp) <= nd && nd <= (Lm - Ls);
    out.lower = static_cast<double>(Ls - Lp) / static_cast<double>(D);
    out.upper = static_cast<double>(Lm - Ls) / static_cast<double>(D);
    return out;
}

CountReport selberg_density_check(double sigma, double T,
                                  const ZeroTable& zeta_table) {
    require_coverage(T, zeta_table);
    CountReport out;
    out.T = T;
    out.sigma = sigma;
    out.observed = sigma <= 0.5 ? count_above(-1e308, T, zeta_table)
                                : count_above(sigma, T, zeta_table);
    out.predicted = std::pow(T, 1.0 - (sigma - 0.5) / 4.0) * std::log(T);
    out.residual = static_cast<double>(out.observed) - out.predicted;
    out.tolerance_band = out.predicted;
    out.in_stated_range = sigma > 0.5;
    return out;
}

double max_unit_interval_ratio(double T, const ZeroTable& table) {
    require_coverage(T, table);
    double worst = 0;
    for (long n = 2; n + 1 <= static_cast<long>(T); ++n) {
        long cnt = 0;
        for (const ZeroRecord& r : table.records)
            if (r.gamma > n && r.gamma <= n + 1) cnt += r.multiplicity;
        worst = std::max(worst, cnt / std::log(static_cast<double>(n)));
    }
    return worst;
}

} // namespace zetaprime
