// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace zetaprime {

// Riemann-Siegel theta, the continuous branch of
//   theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi,  theta(0) = 0.
// Computed from the Stirling series after shifting the argument to
// |z| >= 12; for Re z > 0 the shift identity holds on the principal
// branch, so no unwinding is needed. Absolute accuracy is a small
// multiple of double epsilon times |theta|.
double rs_theta(double t);

// d theta / dt = Re digamma(1/4 + it/2) / 2 - log(pi) / 2.
double rs_theta_deriv(double t);

struct RealValueWithError {
    double value = 0;
    double abs_error = 0;
};

// Hardy's function Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t
// with the same zeros as zeta on the critical line. The reported error
// covers the zeta evaluation and the phase rounding; the discarded
// imaginary part is checked against it.
RealValueWithError hardy_Z(double t, double tol);

struct HardyPair {
    double z = 0;
    double z_deriv = 0;
    double z_error = 0;
    double z_deriv_error = 0;
};

// Z and Z'(t) = Re[ i exp(i theta) (theta' zeta + zeta') ] from one
// evaluation of zeta and zeta'.
HardyPair hardy_Z_pair(double t, double tol);

} // namespace zetaprime
