// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by tests. Everything here
// deliberately avoids the code paths of the library proper: zeta comes from
// the alternating series instead of Euler-Maclaurin, the unitary ensemble
// from dense matrices instead of the Szego recurrence, prime sums from a
// local sieve instead of the shared prime list.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using cd = std::complex<double>;

struct ValueWithBound {
    cd value{};
    double bound = 0; // |value - truth| <= bound, by the method's analysis
};

// Lanczos approximation of Gamma(z) for Re z > 0 (g = 607/128, 15 terms).
inline cd lanczos_gamma(cd z) {
    static const double g = 607.0 / 128.0;
    static const double c[15] = {
        0.99999999999999709182,     57.156235665862923517,
        -59.597960355475491248,     14.136097974741747174,
        -0.49191381609762019978,    3.3994649984811888699e-5,
        4.6523628927048575665e-5,   -9.8374475304879564677e-5,
        1.5808870322491248884e-4,   -2.1026444172410488319e-4,
        2.1743961811521264320e-4,   -1.6431810653676389022e-4,
        8.4418223983852743293e-5,   -2.6190838401581408670e-5,
        3.6899182659531622704e-6};
    cd acc = c[0];
    for (int k = 1; k < 15; ++k) acc += c[k] / (z - 1.0 + double(k));
    const cd w = z - 0.5 + g;
    const double half_log_2pi = 0.91893853320467274178;
    return std::exp((z - 0.5) * std::log(w) - w + half_log_2pi) * acc;
}

// eta(s) = sum (-1)^{n-1} n^{-s} accelerated with Chebyshev weights; the
// truncation error after n terms is below 3 (1 + 2|t|) e^{pi |t| / 2} /
// (3 + sqrt 8)^n. Intended for Re s >= 1/2 and |t| <= 120 or so, where
// n = 160 leaves enormous margin.
inline ValueWithBound borwein_eta(cd s) {
    constexpr int n = 160;
    static std::vector<double> d = [] {
        // d[k] = n * sum_{j<=k} (n+j-1)! 4^j / ((n-j)! (2j)!)
        std::vector<double> v(n + 1);
        double term = 1.0;
        double run = 1.0;
        v[0] = double(n);
        for (int j = 1; j <= n; ++j) {
            term *= 4.0 * double(n + j - 1) * double(n - j + 1) /
                    (double(2 * j - 1) * double(2 * j));
            run += term;
            v[j] = double(n) * run;
        }
        return v;
    }();
    cd sum = 0;
    for (int k = 0; k < n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * (d[k] - d[n]) * std::exp(-s * std::log(double(k + 1)));
    }
    const double t = std::abs(s.imag());
    const double trunc = 3.0 * (1.0 + 2.0 * t) * std::exp(1.5707963267948966 * t) /
                         std::pow(3.0 + std::sqrt(8.0), double(n));
    return {-sum / d[n], trunc + 1e-13 * (1.0 + std::abs(sum / d[n]))};
}

// zeta from eta for Re s >= 1/2, reflected through the functional equation
// for Re s < 1/2. Callers keep away from s = 1 (pole), s = 0, and from the
// lines where 1 - 2^{1-s} nearly vanishes; the returned bound grows there.
inline ValueWithBound zeta(cd s) {
    if (s.real() >= 0.5) {
        const ValueWithBound eta = borwein_eta(s);
        const cd den = 1.0 - std::exp((1.0 - s) * std::log(2.0));
        const cd val = eta.value / den;
        const double bound =
            (eta.bound + 1e-14 * std::abs(eta.value)) / std::abs(den) +
            1e-13 * (1.0 + std::abs(val));
        return {val, bound};
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
    const ValueWithBound tail = zeta(1.0 - s);
    const double pi = 3.14159265358979323846;
    const cd chi = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi)) *
                   std::sin(0.5 * pi * s) * lanczos_gamma(1.0 - s);
    const cd val = chi * tail.value;
    const double rel_tail =
        tail.bound / std::max(std::abs(tail.value), 1e-300);
    const double bound =
        std::abs(val) * (rel_tail + 5e-13) + 1e-14 * std::abs(chi);
    return {val, bound};
}

// -sum_{2 <= n <= N} log n / n^2 with the tail bounded by the integral
// comparison: sum_{n > N} log n / n^2 <= (log N + 1) / N + log N / N^2.
inline ValueWithBound zeta_prime_at_two(std::uint32_t N = 3000000) {
    double acc = 0;
    for (std::uint32_t n = N; n >= 2; --n)
        acc -= std::log(double(n)) / (double(n) * double(n));
    const double tail =
        (std::log(double(N)) + 1.0) / double(N) +
        std::log(double(N)) / (double(N) * double(N));
    return {cd(acc, 0), tail + 1e-12};
}

// Local sieve, independent of the library's prime machinery.
inline std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = std::uint64_t(p) * p; q <= limit; q += p)
            comp[q] = true;
    }
    return out;
}

// -sum over prime powers p^k <= N of log p / p^{2k}; same tail bound shape
// as the zeta' sum since Lambda(n) <= log n.
inline ValueWithBound log_deriv_at_two(std::uint32_t N = 3000000) {
    const auto primes = sieve_primes(N);
    double acc = 0;
    for (std::uint32_t p : primes) {
        const double lp = std::log(double(p));
        double pk = double(p);
        while (pk <= double(N)) {
            acc -= lp / (pk * pk);
            pk *= double(p);
        }
    }
    const double tail = (std::log(double(N)) + 1.0) / double(N);
    return {cd(acc, 0), tail + 1e-12};
}

// Chebyshev psi by trial-division primality, for small x only.
inline double psi_by_trial_division(double x) {
    auto is_prime = [](std::uint64_t m) {
        if (m < 2) return false;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) return false;
        return true;
    };
    double acc = 0;
    for (std::uint64_t n = 2; double(n) <= x; ++n) {
        // n = p^k exactly when the smallest prime factor p of n satisfies
        // p^k = n for some k
        std::uint64_t p = 0;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                p = d;
                break;
            }
        if (p == 0) {
            acc += std::log(double(n)); // n itself prime
            continue;
        }
        std::uint64_t m = n;
        while (m % p == 0) m /= p;
        if (m == 1 && is_prime(p)) acc += std::log(double(p));
    }
    return acc;
}

// V(sigma) by direct summation over a sieve, with the same integral tail
// comparison the library uses but entirely separate code.
inline ValueWithBound variance_constant(double sigma,
                                        std::uint32_t N = 200000) {
    const auto primes = sieve_primes(N);
    double acc = 0;
    for (std::uint32_t p : primes) {
        const double lp2 = std::log(double(p)) * std::log(double(p));
        double pk = double(p);
        while (pk <= double(N)) {
            acc += 0.5 * lp2 * std::pow(pk, -2.0 * sigma);
            pk *= double(p);
        }
    }
    // tail: sum_{n > N} (1/2) log^2 n n^{-2 sigma} is below the integral
    // int_N^inf (1/2) log^2 x x^{-a} dx with a = 2 sigma, which has the
    // closed form below
    const double a = 2.0 * sigma;
    const double lN = std::log(double(N));
    const double tail = 0.5 * std::pow(double(N), 1.0 - a) / (a - 1.0) *
                        (lN * lN + 2.0 * lN / (a - 1.0) +
                         2.0 / ((a - 1.0) * (a - 1.0)));
    return {cd(acc, 0), tail};
}

// Haar-unitary eigenangles through a dense matrix: complex Ginibre, QR,
// phase-fixed Q, then a full eigensolve. Slow but entirely disjoint from
// the Szego-recurrence sampler.
inline std::vector<double> haar_eigenangles(int N, std::mt19937_64& g) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto gauss = [&]() {
        double a = u01(g), b = u01(g);
        while (a <= 0) a = u01(g);
        const double r = std::sqrt(-2.0 * std::log(a));
        return cd(r * std::cos(6.283185307179586 * b),
                  r * std::sin(6.283185307179586 * b));
    };
    Eigen::MatrixXcd A(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) A(i, j) = gauss();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
    Eigen::MatrixXcd Q = qr.householderQ();
    const Eigen::MatrixXcd R =
        qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < N; ++j) {
        const cd r = R(j, j);
        Q.col(j) *= r / std::abs(r);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Q, false);
    std::vector<double> ang(N);
    for (int i = 0; i < N; ++i) {
        double a = std::arg(es.eigenvalues()[i]);
        if (a < 0) a += 6.283185307179586;
        ang[i] = a;
    }
    std::sort(ang.begin(), ang.end());
    return ang;
}

// Monic polynomial with the given unit-circle roots, multiplied in
// bit-reversed index order. The pairing spreads the arc clusters without
// reusing the library's ordering heuristic.
inline std::vector<cd> poly_bit_reversed(const std::vector<double>& angles) {
    const int n = int(angles.size());
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    std::vector<int> order;
    order.reserve(n);
    for (int k = 0; k < (1 << bits); ++k) {
        int r = 0;
        for (int b = 0; b < bits; ++b)
            if (k & (1 << b)) r |= 1 << (bits - 1 - b);
        if (r < n) order.push_back(r);
    }
    std::vector<cd> coeffs{1.0};
    for (int idx : order) {
        const cd root = std::polar(1.0, angles[idx]);
        std::vector<cd> next(coeffs.size() + 1, cd(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];
            next[j] -= root * coeffs[j];
        }
        coeffs.swap(next);
    }
    return coeffs;
}

// Moduli of the critical points of the characteristic polynomial with the
// given eigenangles, through the companion matrix of the derivative.
inline std::vector<double> derivative_moduli_dense(
    const std::vector<double>& angles) {
    const auto z = poly_bit_reversed(angles);
    std::vector<cd> dz(z.size() - 1);
    for (std::size_t j = 1; j < z.size(); ++j) dz[j - 1] = double(j) * z[j];
    const int m = int(dz.size()) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
    for (int k = 0; k + 1 < m; ++k) C(k + 1, k) = 1.0;
    for (int k = 0; k < m; ++k) C(k, m - 1) = -dz[k] / dz[m];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<double> mod(m);
    for (int i = 0; i < m; ++i) mod[i] = std::abs(es.eigenvalues()[i]);
    return mod;
}

struct EnsembleMoment {
    double mean = 0;
    double stderr_mc = 0;
    long total = 0;
};

// n independent dense-matrix draws, each reduced to its derivative moduli.
// Sampling once and scanning several thresholds afterwards keeps repeated
// eigensolves out of multi-threshold comparisons.
inline std::vector<std::vector<double>> cue_moduli_dense(int N, int n,
                                                         std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::vector<std::vector<double>> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(derivative_moduli_dense(haar_eigenangles(N, g)));
    return out;
}

// Mean fraction of moduli below 1 - x/N across the stored draws.
inline EnsembleMoment radial_moment_from(
    const std::vector<std::vector<double>>& draws, int N, double x) {
    double sum = 0, sumsq = 0;
    long total = 0;
    for (const auto& mod : draws) {
        long cnt = 0;
        for (double m : mod)
            if (m < 1.0 - x / double(N)) ++cnt;
        const double f = double(cnt) / double(mod.size());
        sum += f;
        sumsq += f * f;
        total += cnt;
    }
    EnsembleMoment out;
    const double n = double(draws.size());
    out.mean = sum / n;
    const double var = std::max(0.0, sumsq / n - out.mean * out.mean);
    out.stderr_mc = std::sqrt(var / n);
    out.total = total;
    return out;
}

// Mean fraction of derivative critical points with modulus < 1 - x/N over
// n independent dense-matrix samples.
inline EnsembleMoment cue_radial_dense(int N, double x, int n,
                                       std::uint64_t seed) {
    return radial_moment_from(cue_moduli_dense(N, n, seed), N, x);
}

} // namespace oracle
