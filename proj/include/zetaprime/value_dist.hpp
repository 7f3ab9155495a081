// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "zetaprime/zero_table.hpp"

namespace zetaprime {

// Absolute constant in the pointwise bound |zeta'/zeta| <= c1 log^2 t away
// from zeros; enters the large-value cutoff. Frozen.
inline constexpr double kC1 = 1.0;

struct DistributionSample {
    double t = 0;
    double magnitude = 0; // |zeta'/zeta(sigma+it)| / sqrt(V)
    bool excluded = false;
};

struct SampleSet {
    double sigma = 0;
    double T = 0;
    std::uint64_t seed = 0;
    double V = 0; // normalization constant used
    std::vector<DistributionSample> samples;
    long n_excluded = 0;
};

// n points t drawn uniformly on (0, T); sample k depends only on (seed, k),
// so the same seed at larger T stretches the same point set, which keeps
// the cross-T trend comparisons on common random numbers. Evaluator
// failures (too close to a zeta zero) become excluded samples; they are
// treated as arbitrarily large magnitudes downstream.
SampleSet sample_magnitudes(double sigma, double T, int n,
                            std::uint64_t seed);

struct EcdfRow {
    double r = 0;
    double ecdf = 0;
    double gaussian = 0; // 1 - exp(-r^2/2)
    double gap = 0;      // ecdf - gaussian
    double stderr_mc = 0; // sqrt(p(1-p)/n); the 95% band is 1.96 times this
};

struct EcdfReport {
    std::vector<EcdfRow> rows;
    double sup_gap = 0; // Kolmogorov-Smirnov sup over all jump points
    long n = 0;
    long n_excluded = 0;
};

EcdfReport ecdf_vs_gaussian(const SampleSet& set,
                            const std::vector<double>& r_grid);

// Cutoffs from the distribution theorem: epsilon below which the
// small-ball bound applies, Omega controlling the error term, and the
// large-value cap c1 V^{-1/2} log^2 T. At desk-scale T the r-window where
// the theorem speaks (r Omega >= 1, r of order 1) is empty; the flag
// records that.
struct Thresholds {
    double sigma = 0;
    double T = 0;
    double psi = 0;
    double epsilon = 0;
    double omega = 0;
    double n_cap = 0;
    bool in_stated_range = false;
};

Thresholds compute_thresholds(double sigma, double T);

// Empirical check of meas{ magnitude <= r } <= C T r^2 for r >= epsilon:
// reports the largest fraction / r^2 over a grid from epsilon up to
// max(1, epsilon).
struct SmallBallReport {
    double epsilon = 0;
    double ratio_at_epsilon = 0;
    double max_ratio = 0;
    bool in_stated_range = false;
};

SmallBallReport small_ball_check(const SampleSet& set,
                                 const Thresholds& th);

// Quadrature of (log|zeta'/zeta|)^2 over (kIntegralStart, T) against the
// T log^2 T scale. Panels split at the ordinates of nearby zeros of both
// functions; tanh-sinh absorbs the squared-log endpoint spikes.
struct SecondMomentReport {
    double sigma = 0;
    double T = 0;
    double value = 0;
    double ratio = 0; // value / (T log^2 T)
    double quad_error = 0;
};

SecondMomentReport second_moment_check(double sigma, double T, double tol,
                                       const ZeroTable& zeta_zeros,
                                       const ZeroTable& zeta_prime_zeros);

} // namespace zetaprime
