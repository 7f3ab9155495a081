// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace zetaprime {

struct StripPoint {
    double sigma = 0;
    double t = 0;
};

// Value plus a bound on |returned - true| coming from the evaluation method's
// truncation analysis and a modeled rounding term. Not a certified enclosure.
struct ComplexValueWithError {
    std::complex<double> value{};
    double abs_error = 0;
};

struct EvalLimits {
    double sigma_lo = -1.0;
    double sigma_hi = 4.0;
    double t_abs_max = 5000.0;
};

// zeta(s), zeta'(s), zeta''(s) by Euler-Maclaurin summation with explicit
// remainder bounds; derivatives come from differentiating the same formula
// term by term, never from numerical differencing. Throws PoleProximity when
// |s - 1| < 10 tol, ToleranceUnreachable when the truncation or precision
// caps cannot meet tol.
ComplexValueWithError eval_zeta(const StripPoint& p, double tol,
                                const EvalLimits& lim = {});
ComplexValueWithError eval_zeta_prime(const StripPoint& p, double tol,
                                      const EvalLimits& lim = {});
ComplexValueWithError eval_zeta_second(const StripPoint& p, double tol,
                                       const EvalLimits& lim = {});

// One Euler-Maclaurin pass for orders 0..order (order <= 2); out[j] holds the
// j-th derivative. Cheaper than separate calls when several are needed.
void eval_zeta_derivatives(const StripPoint& p, double tol, int order,
                           ComplexValueWithError out[3],
                           const EvalLimits& lim = {});

// zeta'/zeta(s) with propagated error. Throws NearSingularity when the
// denominator cannot be certified away from zero (|zeta| below sqrt(tol)) or
// the point is next to the pole of zeta (a pole of the quotient too).
ComplexValueWithError eval_log_deriv(const StripPoint& p, double tol,
                                     const EvalLimits& lim = {});

struct ZeroTable;

// Partial-fraction model of zeta'/zeta near height t: the sum of 1/(s - rho)
// over table zeros with |t - gamma| <= 1. Only a consistency band, not an
// evaluator: the truncated tail is O(log t) with an unspecified constant, so
// callers compare |eval_log_deriv - landau_approx| against C log t. Requires
// t >= 10 and a zeta zero table spanning [t-1, t+1], else
// InsufficientCoverage.
std::complex<double> landau_approx(const StripPoint& p,
                                   const ZeroTable& zeta_zeros);

} // namespace zetaprime
