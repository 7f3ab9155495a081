// SPDX-License-Identifier: Apache-2.0
//
// Vertical-line integrals of log|zeta|, log|zeta'| and log|zeta'/zeta|.
//
// The integrand has logarithmic spikes at every zero (downward) and at the
// pole of zeta (upward) near the line. Naive quadrature stalls on them, so
// each integral is assembled as
//
//   sum over panels of [ closed-form log kernels + adaptive remainder ]
//
// with panel boundaries at the singular ordinates. The remainder
//
//   g(t) = log|f(sigma+it)| - sum_j c_j * (1/2) log(d_j^2 + (t-gamma_j)^2)
//
// is smooth across each panel (c_j = multiplicity for zeros, negative order
// for the pole), and the subtracted kernels are integrated exactly by
// log_kernel_integral. Within a small radius of a registered zero, log|f|
// itself is ill-conditioned, so g is evaluated from the Taylor expansion of
// f at the zero instead; the leading coefficients come from the derivative
// evaluators and are cached per zero.

#include "zetaprime/littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "zetaprime/counts.hpp"
#include "zetaprime/errors.hpp"
#include "zetaprime/eval.hpp"
#include "zetaprime/quadrature.hpp"

namespace zetaprime {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHorizontalWindow = 0.25; // zeros further out are smooth
constexpr double kActiveMargin = 0.75;     // kernel active-range half-width
constexpr double kOnLineGuard = 1e-6;

struct Singular {
    double gamma = 0;
    double d = 0; // beta - sigma (only d^2 enters the kernel)
    int c = 0;    // kernel weight: +mult for zeros, -order for the pole
    bool pole = false;
    bool zeta_zero = false; // a zero of zeta (pole of zeta'/zeta)
    // Taylor data, filled on first use: f(s) ~ lead * (s-rho)^c * (1+A(s-rho))
    mutable bool taylor_ready = false;
    mutable double log_lead = 0;
    mutable std::complex<double> A{0, 0};
};

void require_table(const ZeroTable* t, double T, const char* which) {
    if (t == nullptr)
        throw std::invalid_argument(std::string("integrate_log_abs: ") +
                                    which + " table required but absent");
    if (t->t_hi + 1e-12 < T)
        throw InsufficientCoverage(std::string("integrate_log_abs: ") + which +
                                   " table stops below the requested height");
}

// Evaluation with a one-step tolerance ladder so that log|f| keeps meaning
// near (but not inside) the Taylor radii.
ComplexValueWithError eval_fn(LogIntegrand fn, StripPoint p, double tol) {
    switch (fn) {
    case LogIntegrand::zeta: return eval_zeta(p, tol);
    case LogIntegrand::zeta_prime: return eval_zeta_prime(p, tol);
    default: return eval_log_deriv(p, tol);
    }
}

double log_abs_with_ladder(LogIntegrand fn, StripPoint p) {
    ComplexValueWithError v = eval_fn(fn, p, 1e-9);
    double mag = std::abs(v.value);
    if (mag < 1e4 * v.abs_error) {
        const double tighter = std::max(mag * 1e-5, 1.5e-10);
        v = eval_fn(fn, p, tighter);
        mag = std::abs(v.value);
        if (mag <= 8 * v.abs_error)
            throw NumericsError(
                "integrate_log_abs: value vanishes at a point no registered "
                "zero accounts for");
    }
    return std::log(mag);
}

// Taylor radius: first-order data is available for zeta zeros (giving
// O(r^2) accuracy), only the leading coefficient for zeta' zeros.
double taylor_radius(const Singular& s) { return s.zeta_zero ? 2e-4 : 1e-5; }

void fill_taylor(const Singular& s, double sigma, LogIntegrand fn) {
    if (s.taylor_ready) return;
    const StripPoint rho{sigma + s.d, s.gamma};
    if (s.zeta_zero) {
        const ComplexValueWithError zp = eval_zeta_prime(rho, 2e-10);
        const ComplexValueWithError z2 = eval_zeta_second(rho, 2e-10);
        s.A = z2.value / (2.0 * zp.value);
        switch (fn) {
        case LogIntegrand::zeta:
            s.log_lead = std::log(std::abs(zp.value));
            break;
        case LogIntegrand::log_deriv:
            // zeta'/zeta ~ 1/(s-rho) * (1 + A (s-rho)); lead is 1 and the
            // first-order coefficient is again A (2A from zeta' minus A
            // from zeta)
            s.log_lead = 0;
            break;
        default:
            throw NumericsError("integrate_log_abs: zeta zero registered for "
                                "a function it is not singular for");
        }
    } else {
        const ComplexValueWithError z2 = eval_zeta_second(rho, 2e-10);
        s.log_lead = std::log(std::abs(z2.value));
        if (fn == LogIntegrand::log_deriv) {
            const ComplexValueWithError z0 = eval_zeta(rho, 2e-10);
            s.log_lead -= std::log(std::abs(z0.value));
        }
        s.A = {0, 0};
    }
    s.taylor_ready = true;
}

} // namespace

IntegralResult integrate_log_abs(LogIntegrand fn, double sigma, double T,
                                 double tol, const ZeroTable* zeta_zeros,
                                 const ZeroTable* zeta_prime_zeros) {
    if (!(sigma > 0.5))
        throw std::invalid_argument("integrate_log_abs: sigma must be > 1/2");
    if (!(T > kIntegralStart))
        throw std::invalid_argument("integrate_log_abs: T too small");
    if (!(tol > 0))
        throw std::invalid_argument("integrate_log_abs: tol must be > 0");

    const bool wants_zeta =
        fn == LogIntegrand::zeta || fn == LogIntegrand::log_deriv;
    const bool wants_prime =
        fn == LogIntegrand::zeta_prime || fn == LogIntegrand::log_deriv;
    if (wants_zeta) require_table(zeta_zeros, T, "zeta");
    if (wants_prime) require_table(zeta_prime_zeros, T, "zeta_prime");

    IntegralResult out;
    out.sigma = sigma;
    out.T = T;

    std::vector<Singular> sing;
    auto add_zeros = [&](const ZeroTable& t, bool is_zeta, int sign) {
        for (const ZeroRecord& r : t.records) {
            if (r.gamma <= 0 || r.gamma > T + kActiveMargin) continue;
            if (std::abs(r.beta - sigma) > kHorizontalWindow) continue;
            Singular s;
            s.gamma = r.gamma;
            s.d = r.beta - sigma;
            s.c = sign * r.multiplicity;
            s.zeta_zero = is_zeta;
            if (std::abs(s.d) < kOnLineGuard) out.zero_on_line = true;
            sing.push_back(s);
        }
    };
    if (wants_zeta)
        add_zeros(*zeta_zeros, true, fn == LogIntegrand::log_deriv ? -1 : 1);
    if (wants_prime) add_zeros(*zeta_prime_zeros, false, 1);
    if (std::abs(1.0 - sigma) <= kHorizontalWindow) {
        Singular s;
        s.gamma = 0;
        s.d = 1.0 - sigma;
        s.c = fn == LogIntegrand::zeta_prime ? -2 : -1;
        s.pole = true;
        sing.push_back(s);
    }
    std::sort(sing.begin(), sing.end(),
              [](const Singular& a, const Singular& b) {
                  return a.gamma < b.gamma;
              });
    for (const Singular& s : sing) out.singular_ordinates.push_back(s.gamma);

    std::vector<double> cuts{kIntegralStart, T};
    for (const Singular& s : sing)
        if (s.gamma > kIntegralStart + 1e-9 && s.gamma < T - 1e-9)
            cuts.push_back(s.gamma);
    std::sort(cuts.begin(), cuts.end());

    const double total_len = T - kIntegralStart;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (hi - lo < 1e-12) continue;
        std::vector<const Singular*> active;
        for (const Singular& s : sing)
            if (s.gamma >= lo - kActiveMargin && s.gamma <= hi + kActiveMargin)
                active.push_back(&s);

        auto smooth = [&](double t) {
            const StripPoint p{sigma, t};
            // nearest registered zero decides between direct evaluation and
            // its Taylor expansion
            const Singular* close = nullptr;
            double close_r2 = 1e300;
            for (const Singular* s : active) {
                if (s->pole) continue;
                const double r2 =
                    s->d * s->d + (t - s->gamma) * (t - s->gamma);
                if (r2 < close_r2) {
                    close_r2 = r2;
                    close = s;
                }
            }
            double g;
            if (close != nullptr && std::abs(close->c) == 1 &&
                close_r2 < taylor_radius(*close) * taylor_radius(*close)) {
                fill_taylor(*close, sigma, fn);
                const std::complex<double> delta{-close->d, t - close->gamma};
                // log|f| = c log|delta| + log|lead| + log|1 + A delta|; the
                // kernel term is stated explicitly so the common subtraction
                // below can remove it like everywhere else
                g = close->log_lead +
                    std::log(std::abs(1.0 + close->A * delta)) +
                    close->c * 0.5 * std::log(close_r2);
            } else {
                g = log_abs_with_ladder(fn, p);
            }
            for (const Singular* s : active) {
                const double u = t - s->gamma;
                g -= s->c * 0.5 * std::log(s->d * s->d + u * u);
            }
            return g;
        };

        const double share = std::max(tol * (hi - lo) / total_len, 1e-13);
        const QuadratureResult q = integrate_adaptive(smooth, lo, hi, share);
        out.value += q.value;
        out.quad_error += q.error_estimate;
        out.evaluations += q.evaluations;
        for (const Singular* s : active)
            out.value +=
                s->c * log_kernel_integral(s->d, lo - s->gamma, hi - s->gamma);
    }
    return out;
}

LittlewoodReport littlewood_residual_zeta_prime(
    double sigma, double T, double tol, const ZeroTable& zeta_prime_zeros,
    double band_C) {
    LittlewoodReport out;
    out.sigma = sigma;
    out.T = T;
    const WeightedSumL L = weighted_sum_L(sigma, T, zeta_prime_zeros);
    out.zero_sum = kTwoPi * L.direct;
    const IntegralResult I = integrate_log_abs(LogIntegrand::zeta_prime, sigma,
                                               T, tol, nullptr,
                                               &zeta_prime_zeros);
    out.integral = I.value;
    out.quad_error = I.quad_error;
    out.main_term = T * std::log(std::pow(2.0, sigma) / std::log(2.0));
    out.residual = out.zero_sum - out.integral - out.main_term;
    out.band = band_C * std::log(T);
    return out;
}

LittlewoodReport littlewood_residual_zeta(double sigma, double T, double tol,
                                          const ZeroTable& zeta_zeros,
                                          double band_C) {
    LittlewoodReport out;
    out.sigma = sigma;
    out.T = T;
    const WeightedSumL L = weighted_sum_L(sigma, T, zeta_zeros);
    out.zero_sum = kTwoPi * L.direct;
    const IntegralResult I =
        integrate_log_abs(LogIntegrand::zeta, sigma, T, tol, &zeta_zeros,
                          nullptr);
    out.integral = I.value;
    out.quad_error = I.quad_error;
    out.main_term = 0;
    out.residual = out.zero_sum - out.integral;
    out.band = band_C * std::log(T);
    return out;
}

namespace {

bool theorem_range(double sigma, double T, double denom_factor) {
    const double L = std::log(T);
    const double L2 = std::log(L);
    const double off = 2.0 * sigma - 1.0;
    return off >= L2 / std::cbrt(L) && off <= 1.0 / (denom_factor * L2);
}

double safe_E(double sigma, double T) {
    const double psi = (2.0 * sigma - 1.0) * std::log(T);
    if (!(psi > 1.0) || !(T > 16.0)) return std::nan("");
    return error_term_E(psi, T).value;
}

} // namespace

TheoremReport theorem_main_comparison(double sigma, double T, double tol,
                                      const ZeroTable& zeta_zeros,
                                      const ZeroTable& zeta_prime_zeros) {
    TheoremReport out;
    out.sigma = sigma;
    out.T = T;
    const IntegralResult I =
        integrate_log_abs(LogIntegrand::log_deriv, sigma, T, tol, &zeta_zeros,
                          &zeta_prime_zeros);
    out.lhs = I.value;
    out.quad_error = I.quad_error;
    out.rhs = T * std::log(1.0 / (2.0 * sigma - 1.0)) - 0.5 * kEulerGamma * T;
    out.residual = out.lhs - out.rhs;
    out.residual_over_T = out.residual / T;
    out.E_value = safe_E(sigma, T);
    out.in_stated_range = theorem_range(sigma, T, 10.0);
    return out;
}

TheoremReport theorem1_comparison(double sigma, double T,
                                  const ZeroTable& zeta_prime_zeros) {
    TheoremReport out;
    out.sigma = sigma;
    out.T = T;
    out.lhs = kTwoPi * weighted_sum_L(sigma, T, zeta_prime_zeros).direct;
    out.rhs = T * std::log(1.0 / (2.0 * sigma - 1.0)) +
              (std::log(std::pow(2.0, sigma) / std::log(2.0)) -
               0.5 * kEulerGamma) *
                  T;
    out.residual = out.lhs - out.rhs;
    out.residual_over_T = out.residual / T;
    out.E_value = safe_E(sigma, T);
    out.in_stated_range = theorem_range(sigma, T, 10.0);
    return out;
}

} // namespace zetaprime
