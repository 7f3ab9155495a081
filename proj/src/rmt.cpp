// SPDX-License-Identifier: Apache-2.0

#include "zetaprime/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "zetaprime/counts.hpp"
#include "zetaprime/errors.hpp"
#include "zetaprime/rng.hpp"

namespace zetaprime {

namespace {

constexpr double kTwoPi = 6.28318530717958648;

} // namespace

UnitarySample sample_cue(int N, std::uint64_t seed) {
    if (N < 2) throw std::invalid_argument("sample_cue: N >= 2");
    std::mt19937_64 g(seed);

    // Szego recurrence on ascending coefficient vectors. phi stays monic;
    // phi*_k(z) is the reversed conjugate of phi_k, folded in directly.
    std::vector<cd> phi{1.0};
    for (int k = 0; k < N; ++k) {
        cd alpha;
        if (k == N - 1) {
            const double ang = kTwoPi * uniform01(g);
            alpha = cd(std::cos(ang), std::sin(ang));
        } else {
            const int m = N - 1 - k;
            const double r = std::sqrt(1.0 - std::pow(uniform01(g), 1.0 / m));
            const double ang = kTwoPi * uniform01(g);
            alpha = r * cd(std::cos(ang), std::sin(ang));
        }
        std::vector<cd> next(phi.size() + 1, cd(0.0));
        for (std::size_t j = 0; j < phi.size(); ++j) next[j + 1] = phi[j];
        for (std::size_t j = 0; j < phi.size(); ++j)
            next[j] -= std::conj(alpha) *
                       std::conj(phi[phi.size() - 1 - j]);
        phi = std::move(next);
    }

    const std::vector<cd> roots = poly_roots(phi);
    UnitarySample out;
    out.N = N;
    out.seed = seed;
    out.eigenangles.reserve(roots.size());
    for (cd r : roots) {
        double a = std::atan2(r.imag(), r.real());
        if (a < 0) a += kTwoPi;
        if (a >= kTwoPi) a -= kTwoPi;
        out.eigenangles.push_back(a);
    }
    std::sort(out.eigenangles.begin(), out.eigenangles.end());
    return out;
}

DerivativeZeroSet derivative_zeros(const UnitarySample& u) {
    if (u.N < 2 || static_cast<int>(u.eigenangles.size()) != u.N)
        throw std::invalid_argument("derivative_zeros: malformed sample");
    std::vector<cd> ev(u.N);
    for (int k = 0; k < u.N; ++k)
        ev[k] = cd(std::cos(u.eigenangles[k]), std::sin(u.eigenangles[k]));
    const std::vector<cd> dz = poly_derivative(poly_from_roots(ev));

    double coeff_max = 0;
    for (cd c : dz) coeff_max = std::max(coeff_max, std::abs(c));
    const double ver_tol = 1e-9 * coeff_max;

    DerivativeZeroSet out;
    out.zeros = poly_roots(dz);
    for (cd z : out.zeros) {
        // written so that a NaN residual fails rather than slips through
        if (!(std::abs(poly_eval(dz, z)) <= ver_tol))
            throw RootVerificationFailure(
                "derivative_zeros: root residual exceeds tolerance");
        out.max_abs = std::max(out.max_abs, std::abs(z));
    }
    return out;
}

ModuliEnsemble sample_derivative_moduli(int N, long n_samples,
                                        std::uint64_t seed) {
    if (n_samples < 1)
        throw std::invalid_argument("sample_derivative_moduli: n >= 1");
    ModuliEnsemble out;
    out.N = N;
    out.seed = seed;
    out.sample_moduli.reserve(n_samples);
    for (long k = 0; k < n_samples; ++k) {
        const std::uint64_t child =
            child_seed(seed, static_cast<std::uint64_t>(k));
        try {
            const DerivativeZeroSet dz = derivative_zeros(sample_cue(N, child));
            std::vector<double> mods;
            mods.reserve(dz.zeros.size());
            for (cd z : dz.zeros) mods.push_back(std::abs(z));
            out.sample_moduli.push_back(std::move(mods));
        } catch (const RootVerificationFailure&) {
            out.discarded_indices.push_back(static_cast<std::uint64_t>(k));
        }
    }
    return out;
}

namespace {

EnsembleStat stat_from_counts(const ModuliEnsemble& e, double x,
                              bool count_inside) {
    EnsembleStat st;
    st.N = e.N;
    st.x = x;
    st.n_discarded = static_cast<long>(e.discarded_indices.size());
    const double thresh = 1.0 - x / e.N;
    const double slots = e.N - 1;
    double sum = 0, sumsq = 0;
    for (const std::vector<double>& mods : e.sample_moduli) {
        long long c = 0;
        for (double m : mods)
            if (m < thresh) ++c;
        if (!count_inside) c = static_cast<long long>(mods.size()) - c;
        st.total_count += c;
        const double f = static_cast<double>(c) / slots;
        sum += f;
        sumsq += f * f;
        ++st.n_samples;
    }
    if (st.n_samples == 0)
        throw RootVerificationFailure(
            "ensemble stat: every sample was discarded");
    const double n = static_cast<double>(st.n_samples);
    st.mean_fraction = sum / n;
    const double var =
        std::max(0.0, (sumsq - n * st.mean_fraction * st.mean_fraction) /
                          std::max(1.0, n - 1.0));
    st.stderr_mc = std::sqrt(var / n);
    return st;
}

} // namespace

EnsembleStat radial_from_moduli(const ModuliEnsemble& e, double x) {
    if (!(x > 0.0) || !(x < e.N))
        throw std::invalid_argument("radial law needs 0 < x < N");
    return stat_from_counts(e, x, true);
}

EnsembleStat radial_mean_fraction(int N, double x, long n_samples,
                                  std::uint64_t seed) {
    return radial_from_moduli(sample_derivative_moduli(N, n_samples, seed), x);
}

EnsembleStat small_x_from_moduli(const ModuliEnsemble& e, double nu) {
    if (!(nu > 0.0) || !(nu < e.N))
        throw std::invalid_argument("small-x law needs 0 < nu < N");
    return stat_from_counts(e, nu, false);
}

EnsembleStat small_x_fraction(int N, double nu, long n_samples,
                              std::uint64_t seed) {
    return small_x_from_moduli(sample_derivative_moduli(N, n_samples, seed),
                               nu);
}

BridgeReport bridge_compare(double T, double x, const ZeroTable& zp_table,
                            long n_samples, std::uint64_t seed) {
    BridgeReport out;
    out.T = T;
    out.x = x;
    const double logT = std::log(T);
    out.N = static_cast<int>(std::floor(logT));
    if (out.N < 2)
        throw std::invalid_argument("bridge_compare: floor(log T) < 2");
    if (!(x > 0.0) || !(x < out.N))
        throw std::invalid_argument("bridge_compare: need 0 < x < floor(log T)");
    out.sigma = 0.5 + x / logT;

    const CountReport total = count_nprime(T, zp_table);
    const CountReport right = count_nprime_sigma(out.sigma, T, zp_table);
    out.zeta_fraction =
        total.observed > 0 ? static_cast<double>(right.observed) /
                                 static_cast<double>(total.observed)
                           : 0.0;

    const EnsembleStat st = radial_mean_fraction(out.N, x, n_samples, seed);
    out.rmt_fraction = st.mean_fraction;
    out.rmt_stderr = st.stderr_mc;
    out.ratio = out.rmt_fraction > 0 ? out.zeta_fraction / out.rmt_fraction
                                     : std::numeric_limits<double>::quiet_NaN();

    const double L2 = std::log(logT);
    out.in_stated_range =
        x >= L2 * L2 * std::cbrt(logT * logT) && x <= logT / (L2 * L2);
    return out;
}

} // namespace zetaprime
