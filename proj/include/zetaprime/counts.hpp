// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "zetaprime/zero_table.hpp"

namespace zetaprime {

// Band constants frozen after calibration runs on T <= 500; acceptance and
// CLI sweeps must use these, not recalibrated values.
inline constexpr double kBerndtBandC = 3.0;
inline constexpr double kUnitIntervalBandC = 3.0;

struct CountReport {
    double T = 0;
    std::optional<double> sigma;
    long observed = 0;
    double predicted = 0;
    double residual = 0;       // observed - predicted
    double tolerance_band = 0; // C log T, or predicted * sqrt(E)
    bool in_stated_range = true;
};

// (T/2pi) log(T/2pi) - (1 + log 2) T/2pi, the smooth count of zeta' zeros
// up to height T.
double nprime_main_term(double T);

// Piecewise error factor governing the asymptotic theorems. psi is the
// rescaled offset (2 sigma - 1) log T. The regime boundary sits at
// psi = L2^{4/17} (log T)^{14/17} where the two branches coincide; the low
// branch is L2^3 (log T)^{3/2} / psi^{9/4}, the high branch
// L2^2 psi^2 / log^2 T, with L2 = log log T. Outside the stated psi window
// the nearest branch is evaluated anyway and flagged.
struct ErrorTermE {
    double psi = 0;
    double T = 0;
    double value = 0;
    enum class Regime { low, high } regime = Regime::low;
    bool in_stated_range = false;
};
ErrorTermE error_term_E(double psi, double T);

// Count of table records with 0 < gamma <= T against the main term, with a
// C log T band. Throws InsufficientCoverage if the table stops short of T.
CountReport count_nprime(double T, const ZeroTable& table,
                         double band_C = kBerndtBandC);

// Count of records right of sigma against T / (2 pi (sigma - 1/2)). The
// band is predicted * sqrt(E(psi)); in_stated_range reflects the window
// L2^2 / (log T)^{1/3} <= 2 sigma - 1 <= 1 / (20 L2), which is empty at
// desk-scale T, so the band is informational there.
CountReport count_nprime_sigma(double sigma, double T,
                               const ZeroTable& table);

// Sum of (beta - sigma) over records with beta > sigma, 0 < gamma <= T,
// evaluated twice: directly, and as the exact piecewise-constant integral
// of the count function over u in (sigma, infinity). The two agree to
// rounding; both are returned so callers can assert it.
struct WeightedSumL {
    double sigma = 0;
    double T = 0;
    double direct = 0;
    double integrated = 0;
};
WeightedSumL weighted_sum_L(double sigma, double T, const ZeroTable& table);

// The bracketing of the count by finite differences of L,
//   (L(sigma) - L(sigma+Delta)) / Delta <= N'(sigma,T)
//                                       <= (L(sigma-Delta) - L(sigma)) / Delta,
// verified in exact integer arithmetic: beta values, sigma and Delta are
// snapped to the 2^-50 grid and the scaled inequalities are checked in
// 128-bit integers, so `holds` is a theorem about the snapped data, not a
// float comparison. Requires 0 < Delta < (2 sigma - 1)/4; throws
// std::invalid_argument otherwise.
struct SandwichReport {
    double sigma = 0;
    double delta = 0;
    double T = 0;
    double lower = 0; // (L(sigma) - L(sigma+Delta)) / Delta, snapped data
    double upper = 0; // (L(sigma-Delta) - L(sigma)) / Delta, snapped data
    long observed = 0;
    bool holds = false;
};
SandwichReport sandwich_check(double sigma, double delta, double T,
                              const ZeroTable& table);

// Observed N(sigma, T) from a zeta table against the density bound
// T^{1 - (sigma - 1/2)/4} log T. The bound has an unspecified constant, so
// the report is informational; at desk scale observed is 0 for any
// sigma > 1/2.
CountReport selberg_density_check(double sigma, double T,
                                  const ZeroTable& zeta_table);

// Largest count of records in a unit interval (n, n+1] with n + 1 <= T,
// divided by log n. Feeds the unit-interval growth check.
double max_unit_interval_ratio(double T, const ZeroTable& table);

} // namespace zetaprime
