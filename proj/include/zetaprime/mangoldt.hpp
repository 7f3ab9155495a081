// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace zetaprime {

// Lambda(n): log p when n = p^k, else 0. Exact for any n that fits; uses the
// shared prime list internally.
double von_mangoldt(std::uint64_t n);

// Primes up to at least `limit`, cached and grown on demand.
const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit);

// Chebyshev psi(x) = sum_{n <= x} Lambda(n).
double chebyshev_psi(double x);

// V(sigma) = 1/2 sum_{n >= 2} Lambda(n)^2 / n^{2 sigma}. Leading order
// 1/(2 (2 sigma - 1)^2); finite for every sigma > 1/2.
struct VarianceConstant {
    double sigma = 0;
    double V = 0;          // midpoint estimate: partial sum + tail_bound
    double tail_bound = 0; // |V - exact| <= tail_bound
    std::uint64_t cutoff = 0; // summation ran over prime powers <= cutoff
};

// Sums prime powers up to an adaptively chosen cutoff and bounds the tail by
// an explicit integral comparison through Chebyshev's psi (psi(x) < 1.03883 x
// for all x > 0). `tail_tol` is relative: the run stops once the tail radius
// drops below tail_tol * max(1, V). The tail decays like a power of the
// cutoff, so tolerances much below 1e-3 are reachable only for sigma well
// away from 1/2. Throws TailBoundFailure when the target cannot be met below
// `cap`.
VarianceConstant compute_V(double sigma, double tail_tol,
                           std::uint64_t cap = (1ull << 26));

} // namespace zetaprime
