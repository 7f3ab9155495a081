// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "zetaprime/zero_table.hpp"

namespace zetaprime {

inline constexpr double kEulerGamma = 0.57721566490153286;

// Frozen band constant for the residual checks below, calibrated once on
// T <= 500 sweeps and fixed thereafter.
inline constexpr double kLittlewoodBandC = 3.0;

// The line integrals start here rather than at 0; the difference is O(1)
// and is absorbed into the C log T bands.
inline constexpr double kIntegralStart = 0.1;

enum class LogIntegrand { zeta, zeta_prime, log_deriv };

struct IntegralResult {
    double sigma = 0;
    double T = 0;
    double value = 0;
    double quad_error = 0;
    int evaluations = 0;
    // ordinates of table zeros within horizontal distance 0.25 of the line
    // (the pole at s = 1 contributes ordinate 0 when sigma is within 0.25)
    std::vector<double> singular_ordinates;
    bool zero_on_line = false; // some |beta - sigma| < 1e-6
};

// Integral of log|f(sigma + it)| for t in (kIntegralStart, T). Panels are
// split at every singular ordinate; on each panel the log kernels of nearby
// zeros (and of the pole at s = 1, with negative weight) are integrated in
// closed form and only the smooth remainder goes through adaptive
// quadrature. Points closer to a registered zero than its Taylor radius are
// evaluated through the leading coefficient of f there instead of through
// f itself. Tables: zeta zeros are required for `zeta` and `log_deriv`,
// zeta' zeros for `zeta_prime` and `log_deriv`; pass nullptr only when the
// corresponding function is not requested. Throws InsufficientCoverage when
// a required table stops short of T.
IntegralResult integrate_log_abs(LogIntegrand fn, double sigma, double T,
                                 double tol, const ZeroTable* zeta_zeros,
                                 const ZeroTable* zeta_prime_zeros);

struct LittlewoodReport {
    double sigma = 0;
    double T = 0;
    double zero_sum = 0;  // 2 pi sum (beta - sigma) over the relevant table
    double integral = 0;  // line integral of log|f|
    double main_term = 0; // the T-linear term of the identity
    double residual = 0;  // zero_sum - integral - main_term
    double quad_error = 0;
    double band = 0; // C log T
};

// 2 pi L(sigma) = integral of log|zeta'| + T log(2^sigma / log 2) + O(log T):
// residual = 2 pi L - integral - T log(2^sigma / log 2).
LittlewoodReport littlewood_residual_zeta_prime(
    double sigma, double T, double tol, const ZeroTable& zeta_prime_zeros,
    double band_C = kLittlewoodBandC);

// Same identity for zeta, whose zero sum vanishes right of the strip's
// midline at desk scale, so the integral itself must stay within the band.
LittlewoodReport littlewood_residual_zeta(double sigma, double T, double tol,
                                          const ZeroTable& zeta_zeros,
                                          double band_C = kLittlewoodBandC);

struct TheoremReport {
    double sigma = 0;
    double T = 0;
    double lhs = 0;
    double rhs = 0;
    double residual = 0;
    double residual_over_T = 0;
    double E_value = 0; // piecewise error factor at psi = (2 sigma - 1) log T
    double quad_error = 0;
    bool in_stated_range = false;
};

// integral of log|zeta'/zeta| over (0, T) against
// T log(1/(2 sigma - 1)) - (gamma/2) T.
TheoremReport theorem_main_comparison(double sigma, double T, double tol,
                                      const ZeroTable& zeta_zeros,
                                      const ZeroTable& zeta_prime_zeros);

// 2 pi L(sigma) against
// T log(1/(2 sigma - 1)) + (log(2^sigma / log 2) - gamma/2) T.
TheoremReport theorem1_comparison(double sigma, double T,
                                  const ZeroTable& zeta_prime_zeros);

} // namespace zetaprime
