// SPDX-License-Identifier: Apache-2.0
#include "zetaprime/theta.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "zetaprime/detail/bernoulli_table.hpp"
#include "zetaprime/errors.hpp"
#include "zetaprime/eval.hpp"

namespace zetaprime {
namespace {

using CLD = std::complex<long double>;

// On |z| >= 12 eight Stirling terms leave a tail below 2e-18, enough
// headroom under the long double arithmetic used here.
constexpr int kStirlingK = 8;
constexpr long double kShiftRadius = 12.0L;
constexpr long double kHalfLog2Pi = 0.918938533204672741780329736406L;
constexpr long double kLogPi = 1.144729885849400174143427351353L;

struct GammaTabs {
    long double stirling[kStirlingK]; // B_{2k} / ((2k)(2k-1)) = C_k (2k-2)!
    long double digamma[kStirlingK];  // B_{2k} / (2k)        = C_k (2k-1)!
};

const GammaTabs& tabs() {
    static GammaTabs g = [] {
        GammaTabs t;
        for (int k = 1; k <= kStirlingK; ++k) {
            long double c =
                strtold(detail::kBernoulliOverFactorial[k - 1], nullptr);
            long double f = 1.0L;
            for (int j = 2; j <= 2 * k - 2; ++j) f *= static_cast<long double>(j);
            t.stirling[k - 1] = c * f;
            t.digamma[k - 1] = c * f * static_cast<long double>(2 * k - 1);
        }
        return t;
    }();
    return g;
}

CLD log_gamma_right(CLD z) {
    CLD shift{0.0L, 0.0L};
    while (std::abs(z) < kShiftRadius) {
        shift -= std::log(z);
        z += 1.0L;
    }
    CLD lg = (z - CLD{0.5L, 0.0L}) * std::log(z) - z + kHalfLog2Pi + shift;
    const CLD z2 = CLD{1.0L, 0.0L} / (z * z);
    CLD zp = CLD{1.0L, 0.0L} / z;
    for (int k = 0; k < kStirlingK; ++k) {
        lg += tabs().stirling[k] * zp;
        zp *= z2;
    }
    return lg;
}

CLD digamma_right(CLD z) {
    CLD shift{0.0L, 0.0L};
    while (std::abs(z) < kShiftRadius) {
        shift -= CLD{1.0L, 0.0L} / z;
        z += 1.0L;
    }
    CLD ps = std::log(z) - CLD{0.5L, 0.0L} / z + shift;
    const CLD z2 = CLD{1.0L, 0.0L} / (z * z);
    CLD zp = z2;
    for (int k = 0; k < kStirlingK; ++k) {
        ps -= tabs().digamma[k] * zp;
        zp *= z2;
    }
    return ps;
}

long double rs_theta_ld(long double t) {
    const CLD z{0.25L, 0.5L * t};
    return log_gamma_right(z).imag() - 0.5L * t * kLogPi;
}

long double rs_theta_deriv_ld(long double t) {
    const CLD z{0.25L, 0.5L * t};
    return 0.5L * digamma_right(z).real() - 0.5L * kLogPi;
}

double theta_abs_error(long double theta) {
    // accumulated long double rounding plus the final narrowing
    return 1e-16 + 64.0 * 1.1e-19 * std::abs(static_cast<double>(theta));
}

} // namespace

double rs_theta(double t) { return static_cast<double>(rs_theta_ld(t)); }

double rs_theta_deriv(double t) {
    return static_cast<double>(rs_theta_deriv_ld(t));
}

RealValueWithError hardy_Z(double t, double tol) {
    const ComplexValueWithError zeta = eval_zeta({0.5, t}, tol);
    const long double theta = rs_theta_ld(t);
    long double sn, cn;
    sincosl(theta, &sn, &cn);
    const long double wr = cn * static_cast<long double>(zeta.value.real()) -
                           sn * static_cast<long double>(zeta.value.imag());
    const long double wi = sn * static_cast<long double>(zeta.value.real()) +
                           cn * static_cast<long double>(zeta.value.imag());
    const double err = zeta.abs_error +
                       std::abs(zeta.value) * theta_abs_error(theta) + 1e-18;
    if (std::abs(static_cast<double>(wi)) > 8.0 * err + 1e-12)
        throw NumericsError(
            "hardy Z: rotated value has an imaginary part exceeding the "
            "error budget");
    return {static_cast<double>(wr), err};
}

HardyPair hardy_Z_pair(double t, double tol) {
    ComplexValueWithError d[3];
    eval_zeta_derivatives({0.5, t}, tol, 1, d);
    const long double theta = rs_theta_ld(t);
    const double theta_deriv = static_cast<double>(rs_theta_deriv_ld(t));
    long double sn, cn;
    sincosl(theta, &sn, &cn);
    const CLD phase{cn, sn};
    const CLD zeta{static_cast<long double>(d[0].value.real()),
                   static_cast<long double>(d[0].value.imag())};
    const CLD zeta1{static_cast<long double>(d[1].value.real()),
                    static_cast<long double>(d[1].value.imag())};
    const CLD w = phase * zeta;
    const CLD inner = zeta * static_cast<long double>(theta_deriv) + zeta1;
    const CLD wd = CLD{0.0L, 1.0L} * phase * inner;
    const double te = theta_abs_error(theta);
    HardyPair out;
    out.z = static_cast<double>(w.real());
    out.z_error = d[0].abs_error + std::abs(d[0].value) * te + 1e-18;
    out.z_deriv = static_cast<double>(wd.real());
    out.z_deriv_error = std::abs(theta_deriv) * d[0].abs_error +
                        d[1].abs_error +
                        static_cast<double>(std::abs(inner)) * 2.0 * te +
                        1e-18;
    return out;
}

} // namespace zetaprime
