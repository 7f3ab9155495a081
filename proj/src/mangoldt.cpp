// SPDX-License-Identifier: Apache-2.0
#include "zetaprime/mangoldt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetaprime/errors.hpp"
#include "zetaprime/scalar.hpp"

namespace zetaprime {

namespace {

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
    std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::uint32_t> out;
    if (limit >= 2) out.reserve(static_cast<std::size_t>(limit / std::log(std::max(3.0, (double)limit)) * 1.2));
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

struct PrimeCache {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> primes;
};

PrimeCache& cache() {
    static PrimeCache c;
    return c;
}

} // namespace

const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit) {
    PrimeCache& c = cache();
    if (c.limit < limit) {
        std::uint32_t grow = std::max<std::uint32_t>(limit, 1u << 16);
        c.primes = sieve(grow);
        c.limit = grow;
    }
    return c.primes;
}

double von_mangoldt(std::uint64_t n) {
    if (n < 2) return 0.0;
    // n is a prime power iff its smallest prime factor p satisfies n = p^k.
    std::uint64_t m = n;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt((double)n)) + 2;
    const auto& ps = primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(root, 0xffffffffULL)));
    for (std::uint32_t p : ps) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
        }
    }
    // No prime factor <= sqrt(n): n itself is prime.
    return std::log(static_cast<double>(n));
}

double chebyshev_psi(double x) {
    if (x < 2) return 0.0;
    auto lim = static_cast<std::uint32_t>(x);
    const auto& ps = primes_up_to(lim);
    KahanSum<double> acc;
    for (std::uint32_t p : ps) {
        if (p > x) break;
        double lp = std::log(static_cast<double>(p));
        double pk = p;
        while (pk <= x) {
            acc.add(lp);
            if (pk > x / p) break;
            pk *= p;
        }
    }
    return acc.sum;
}

VarianceConstant compute_V(double sigma, double tail_tol, std::uint64_t cap) {
    if (!(sigma > 0.5))
        throw std::invalid_argument("compute_V: sigma must exceed 1/2");
    if (!(tail_tol > 0))
        throw std::invalid_argument("compute_V: tail_tol must be positive");

    const double a = 2.0 * sigma;   // exponent of the Dirichlet series
    const double am1 = a - 1.0;

    // Upper bound for sum_{n > X} Lambda(n) log(n) n^{-a} via Stieltjes
    // integration against psi and psi(t) < 1.03883 t (valid for all t > 0):
    //   tail <= -psi(X) log X X^{-a}
    //           + 1.03883 [ a (X^{1-a} log X/(a-1) + X^{1-a}/(a-1)^2)
    //                       - X^{1-a}/(a-1) ].
    // Lambda(n)^2 <= Lambda(n) log n, so the same bound covers the V tail
    // (halved by the 1/2 in front of V). Requires X > e^{1/a}, true for any
    // cutoff used here.
    auto tail_bound_from = [&](double X, double psiX) {
        double lx = std::log(X);
        double x1a = std::pow(X, 1.0 - a);
        double integral = a * (x1a * lx / am1 + x1a / (am1 * am1)) - x1a / am1;
        double b = -psiX * lx * std::pow(X, -a) + 1.03883 * integral;
        return 0.5 * std::max(b, 0.0);
    };

    // Sum of Lambda(p^k)^2 / p^{k a} over prime powers in (lo, hi].
    auto add_terms = [&](KahanSum<double>& acc, double lo, double hi) {
        const auto& ps = primes_up_to(static_cast<std::uint32_t>(hi));
        for (std::uint32_t p : ps) {
            if (p > hi) break;
            double lp = std::log(static_cast<double>(p));
            double lp2 = lp * lp;
            double pk = p;
            while (pk <= hi) {
                if (pk > lo) acc.add(lp2 * std::pow(pk, -a));
                if (pk > hi / p) break;
                pk *= p;
            }
        }
    };

    std::uint64_t X = 1u << 16;
    double summed_to = 1.0;
    KahanSum<double> acc;
    for (;;) {
        add_terms(acc, summed_to, static_cast<double>(X));
        summed_to = static_cast<double>(X);
        double psiX = chebyshev_psi(static_cast<double>(X));
        double bound = tail_bound_from(static_cast<double>(X), psiX);
        // bound already carries V's leading 1/2, so the midpoint estimate
        // below has error radius bound/2. The target is relative to that
        // midpoint (near 1/2 the partial sum alone badly undershoots V),
        // floored at 1 so the small-V regime stays absolute.
        double target =
            tail_tol * std::max(1.0, 0.5 * acc.sum + 0.5 * bound);
        if (bound * 0.5 <= target || X >= cap) {
            if (bound * 0.5 > target)
                throw TailBoundFailure(
                    "compute_V: tail bound " + std::to_string(bound * 0.5) +
                    " above tail_tol at cutoff cap " + std::to_string(X));
            VarianceConstant out;
            out.sigma = sigma;
            // True tail lies in [0, bound]; report the midpoint.
            out.V = 0.5 * acc.sum + 0.5 * bound;
            out.tail_bound = 0.5 * bound;
            out.cutoff = X;
            return out;
        }
        X *= 2;
        if (X > cap) X = cap;
    }
}

} // namespace zetaprime
