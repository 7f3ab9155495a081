// SPDX-License-Identifier: Apache-2.0
#pragma once

// Euler-Maclaurin evaluation of zeta and its first two s-derivatives.
//
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//             + sum_{k=1}^{M} B_{2k}/(2k)! P_k(s) N^{1-s-2k} + R_{M,N}(s),
//
// with P_k(s) = s(s+1)...(s+2k-2). Bounding the periodized Bernoulli
// polynomial in the integral form of R by |Btilde_m(x)| <= m! 2 zeta(m)/(2pi)^m
// gives, with a = sigma + 2M > 0 and pref = 2 zeta(2M+1)/(2pi)^{2M+1},
//
//   |R|   <= pref * A * I0
//   |R'|  <= pref * (A' I0 + A I1)
//   |R''| <= pref * (A'' I0 + 2 A' I1 + A I2)
//
// where A = prod_{j=0}^{2M} |s+j|, A'/A'' are the one/two-factor-removed
// derivative products, and
//   I0 = N^-a/a,  I1 = N^-a (log N/a + 1/a^2),
//   I2 = N^-a (log^2 N/a + 2 log N/a^2 + 2/a^3).
// Derivatives of the formula itself are taken term by term (product rule on
// P_k and the explicit N-powers), never by numerical differencing.
//
// Bounds are computed in double in log space (A can overflow, N^-a can
// underflow); only the sum runs in the working scalar.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "zetaprime/detail/bernoulli_table.hpp"
#include "zetaprime/scalar.hpp"

namespace zetaprime::detail {

inline constexpr int kMaxEmM = kBernoulliCount; // 44
inline constexpr std::uint32_t kMaxEmN = 1u << 22;
inline constexpr std::uint32_t kLogTableSize = 1u << 18;

template <class S>
const std::vector<S>& log_table() {
    static std::vector<S> tab = [] {
        std::vector<S> v(kLogTableSize);
        for (std::uint32_t n = 1; n < kLogTableSize; ++n)
            v[n] = ScalarOps<S>::log(static_cast<S>(n));
        return v;
    }();
    return tab;
}

template <class S>
const S* bernoulli_coeffs() {
    static std::vector<S> tab = [] {
        std::vector<S> v(kBernoulliCount);
        for (int k = 0; k < kBernoulliCount; ++k)
            v[k] = ScalarOps<S>::from_string(kBernoulliOverFactorial[k]);
        return v;
    }();
    return tab.data();
}

struct EmPlan {
    std::uint32_t N = 0;
    int M = 0;
    double trunc[3] = {0, 0, 0};
    bool feasible = false;
};

// Smallest M whose remainder bounds meet tol/2 for all orders <= order.
inline EmPlan em_choose(double sigma, double t, std::uint32_t N, int order,
                        double tol) {
    // Derivative products on moduli, as ratios to A (A itself in logs):
    // appending a factor of modulus m maps (A, A1, A2) to
    // (A m, A1 m + A, A2 m + 2 A1); in ratio form r1 += 1/m after
    // r2 += 2 r1/m. A zero modulus only shrinks the true bound; clamp.
    double log_a = 0, r1 = 0, r2 = 0;
    double cum_log_a[2 * kMaxEmM + 1], cum_r1[2 * kMaxEmM + 1],
        cum_r2[2 * kMaxEmM + 1];
    for (int j = 0; j <= 2 * kMaxEmM; ++j) {
        double m = std::max(std::hypot(sigma + j, t), 1e-300);
        log_a += std::log(m);
        r2 += 2.0 * r1 / m;
        r1 += 1.0 / m;
        cum_log_a[j] = log_a;
        cum_r1[j] = r1;
        cum_r2[j] = r2;
    }
    const double ln_n = std::log(static_cast<double>(N));
    EmPlan plan;
    plan.N = N;
    double best = std::numeric_limits<double>::infinity();
    for (int M = 1; M <= kMaxEmM; ++M) {
        const double a = sigma + 2.0 * M;
        if (a <= 0) continue; // the remainder integral needs sigma + 2M > 0
        const double log_b0 = std::log(2.406) // 2 zeta(2M+1) <= 2.406, M >= 1
                              - (2.0 * M + 1.0) * std::log(2.0 * M_PI) +
                              cum_log_a[2 * M] - a * ln_n - std::log(a);
        const double b0 = std::exp(log_b0);
        const double i1f = ln_n + 1.0 / a;
        const double i2f = ln_n * ln_n + 2.0 * ln_n / a + 2.0 / (a * a);
        double b[3];
        b[0] = b0;
        b[1] = b0 * (cum_r1[2 * M] + i1f);
        b[2] = b0 * (cum_r2[2 * M] + 2.0 * cum_r1[2 * M] * i1f + i2f);
        double worst = 0;
        for (int j = 0; j <= order; ++j) worst = std::max(worst, b[j]);
        if (worst <= 0.5 * tol) {
            plan.M = M;
            plan.trunc[0] = b[0];
            plan.trunc[1] = b[1];
            plan.trunc[2] = b[2];
            plan.feasible = true;
            return plan;
        }
        if (worst > 4.0 * best) break; // diverging in M; N must grow
        best = std::min(best, worst);
    }
    return plan;
}

template <class S>
struct EmValues {
    Cx<S> f[3];
    S abs_sum[3] = {S(0), S(0), S(0)}; // sums of |term|, feed roundoff model
};

template <class S>
void em_evaluate(double sigma_d, double t_d, const EmPlan& plan, int order,
                 EmValues<S>& out) {
    const S sigma = static_cast<S>(sigma_d);
    const S t = static_cast<S>(t_d);
    const Cx<S> s{sigma, t};
    const std::uint32_t N = plan.N;
    const auto& ltab = log_table<S>();

    KahanSum<S> re[3], im[3];
    S ab[3] = {S(0), S(0), S(0)};
    auto put = [&](int j, const Cx<S>& z, S zabs) {
        re[j].add(z.re);
        im[j].add(z.im);
        ab[j] += zabs;
    };

    for (std::uint32_t n = 1; n < N; ++n) {
        S ln = n < kLogTableSize ? ltab[n] : ScalarOps<S>::log(static_cast<S>(n));
        S mag = ScalarOps<S>::exp(-sigma * ln);
        Cx<S> term = cis(-t * ln) * mag;
        put(0, term, mag);
        if (order >= 1) put(1, term * (-ln), mag * ln);
        if (order >= 2) put(2, term * (ln * ln), mag * ln * ln);
    }

    const S lnN = ScalarOps<S>::log(static_cast<S>(N));
    const S magN = ScalarOps<S>::exp(-sigma * lnN);
    const Cx<S> NmS = cis(-t * lnN) * magN; // N^-s
    const Cx<S> W = NmS * static_cast<S>(N); // N^{1-s}
    const Cx<S> G = Cx<S>{S(1), S(0)} / (s - Cx<S>{S(1), S(0)});
    const Cx<S> WG = W * G, WG2 = WG * G, WG3 = WG2 * G;

    // N^{1-s}/(s-1): d/ds = -logN WG - WG^2; d2/ds2 = log^2N WG + 2 logN WG^2 + 2 WG^3
    put(0, WG, WG.abs());
    if (order >= 1) {
        Cx<S> d = WG * (-lnN) - WG2;
        put(1, d, WG.abs() * ScalarOps<S>::abs(lnN) + WG2.abs());
    }
    if (order >= 2) {
        Cx<S> d = WG * (lnN * lnN) + WG2 * (S(2) * lnN) + WG3 * S(2);
        put(2, d, WG.abs() * lnN * lnN + S(2) * WG2.abs() * ScalarOps<S>::abs(lnN) +
                      S(2) * WG3.abs());
    }

    // N^-s / 2
    put(0, NmS * S(0.5), S(0.5) * magN);
    if (order >= 1) put(1, NmS * (S(-0.5) * lnN), S(0.5) * magN * ScalarOps<S>::abs(lnN));
    if (order >= 2) put(2, NmS * (S(0.5) * lnN * lnN), S(0.5) * magN * lnN * lnN);

    // sum_k C_k P_k(s) N^{1-s-2k}
    const S* C = bernoulli_coeffs<S>();
    Cx<S> P = s;          // P_1 = s
    Cx<S> P1{S(1), S(0)}; // dP/ds
    Cx<S> P2{S(0), S(0)}; // d2P/ds2
    const S invN2 = S(1) / (static_cast<S>(N) * static_cast<S>(N));
    Cx<S> Wk = W * invN2; // N^{1-s-2k}, k = 1
    for (int k = 1; k <= plan.M; ++k) {
        if (k >= 2) {
            const S c1 = static_cast<S>(2 * k - 3);
            const S c2 = static_cast<S>(2 * k - 2);
            Cx<S> q = (s + Cx<S>{c1, S(0)}) * (s + Cx<S>{c2, S(0)});
            Cx<S> q1 = s * S(2) + Cx<S>{c1 + c2, S(0)};
            P2 = P2 * q + P1 * q1 * S(2) + P * S(2);
            P1 = P1 * q + P * q1;
            P = P * q;
            Wk = Wk * invN2;
        }
        const S ck = C[k - 1];
        Cx<S> t0 = P * Wk * ck;
        put(0, t0, t0.abs());
        if (order >= 1) {
            Cx<S> t1 = (P1 * Wk - P * Wk * lnN) * ck;
            put(1, t1, t1.abs());
        }
        if (order >= 2) {
            Cx<S> t2 = (P2 * Wk - P1 * Wk * (S(2) * lnN) + P * Wk * (lnN * lnN)) * ck;
            put(2, t2, t2.abs());
        }
    }

    for (int j = 0; j <= order; ++j) {
        out.f[j] = Cx<S>{re[j].sum, im[j].sum};
        out.abs_sum[j] = ab[j];
    }
}

enum class LaneStatus { ok, needs_higher_precision, trunc_unreachable };

template <class S>
LaneStatus em_lane(double sigma, double t, double tol, int order,
                   std::complex<double> value[3], double err[3]) {
    const double eps = static_cast<double>(ScalarOps<S>::eps());
    std::uint32_t N = std::max<std::uint32_t>(
        24, static_cast<std::uint32_t>(std::ceil(std::abs(t) / 3.7)));
    for (; N <= kMaxEmN; N *= 2) {
        EmPlan plan = em_choose(sigma, t, N, order, tol);
        if (!plan.feasible) continue;
        EmValues<S> vals;
        em_evaluate<S>(sigma, t, plan, order, vals);
        // Phase arguments are O(|t| log N); their rounding enters each term
        // amplified by eps |t| log N. 8 covers the plain arithmetic.
        const double amp = 8.0 + 2.0 * std::abs(t) * std::log(N + 2.0);
        bool ok = true;
        for (int j = 0; j <= order; ++j) {
            double roundoff = eps * amp * static_cast<double>(vals.abs_sum[j]);
            err[j] = plan.trunc[j] + roundoff;
            value[j] = to_cdouble(vals.f[j]);
            if (err[j] > tol) ok = false;
        }
        if (ok) return LaneStatus::ok;
        return LaneStatus::needs_higher_precision;
    }
    return LaneStatus::trunc_unreachable;
}

} // namespace zetaprime::detail
