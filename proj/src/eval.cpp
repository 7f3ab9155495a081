// SPDX-License-Identifier: Apache-2.0
#include "zetaprime/eval.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zetaprime/detail/euler_maclaurin.hpp"
#include "zetaprime/errors.hpp"
#include "zetaprime/zero_table.hpp"

namespace zetaprime {
namespace {

// A lane may serve a tolerance only if its epsilon sits 30 bits below it;
// the roundoff model then has real headroom instead of flapping at the edge.
constexpr double kLaneGate = 1073741824.0; // 2^30

template <class S>
bool lane_admissible(double tol) {
    return static_cast<double>(ScalarOps<S>::eps()) * kLaneGate <= tol;
}

void check_domain(const StripPoint& p, double tol, const EvalLimits& lim) {
    if (!(tol > 0) || !std::isfinite(tol))
        throw std::invalid_argument("eval: tolerance must be positive and finite");
    if (!(p.sigma >= lim.sigma_lo && p.sigma <= lim.sigma_hi) ||
        !(std::abs(p.t) <= lim.t_abs_max)) {
        std::ostringstream os;
        os << "eval: point (" << p.sigma << ", " << p.t
           << ") outside configured strip [" << lim.sigma_lo << ", "
           << lim.sigma_hi << "] x [-" << lim.t_abs_max << ", " << lim.t_abs_max
           << "]";
        throw std::domain_error(os.str());
    }
}

template <class S>
bool try_lane(const StripPoint& p, double tol, int order,
              std::complex<double> value[3], double err[3]) {
    detail::LaneStatus st =
        detail::em_lane<S>(p.sigma, p.t, tol, order, value, err);
    if (st == detail::LaneStatus::trunc_unreachable)
        throw ToleranceUnreachable(
            "eval: series length cap reached before the truncation bound met "
            "the tolerance");
    return st == detail::LaneStatus::ok;
}

void run_lanes(const StripPoint& p, double tol, int order,
               std::complex<double> value[3], double err[3]) {
    if (lane_admissible<double>(tol) &&
        try_lane<double>(p, tol, order, value, err))
        return;
    if (lane_admissible<long double>(tol) &&
        try_lane<long double>(p, tol, order, value, err))
        return;
    if (lane_admissible<__float128>(tol) &&
        try_lane<__float128>(p, tol, order, value, err))
        return;
    throw ToleranceUnreachable(
        "eval: requested tolerance is below what the available precision "
        "lanes can certify");
}

} // namespace

void eval_zeta_derivatives(const StripPoint& p, double tol, int order,
                           ComplexValueWithError out[3],
                           const EvalLimits& lim) {
    check_domain(p, tol, lim);
    if (order < 0 || order > 2)
        throw std::invalid_argument("eval: derivative order must be 0, 1 or 2");
    if (std::hypot(p.sigma - 1.0, p.t) < 10.0 * tol)
        throw PoleProximity("eval: point within 10*tol of the pole at s = 1");
    std::complex<double> value[3];
    double err[3] = {0, 0, 0};
    run_lanes(p, tol, order, value, err);
    for (int j = 0; j <= order; ++j) out[j] = {value[j], err[j]};
}

ComplexValueWithError eval_zeta(const StripPoint& p, double tol,
                                const EvalLimits& lim) {
    ComplexValueWithError out[3];
    eval_zeta_derivatives(p, tol, 0, out, lim);
    return out[0];
}

ComplexValueWithError eval_zeta_prime(const StripPoint& p, double tol,
                                      const EvalLimits& lim) {
    ComplexValueWithError out[3];
    eval_zeta_derivatives(p, tol, 1, out, lim);
    return out[1];
}

ComplexValueWithError eval_zeta_second(const StripPoint& p, double tol,
                                       const EvalLimits& lim) {
    ComplexValueWithError out[3];
    eval_zeta_derivatives(p, tol, 2, out, lim);
    return out[2];
}

ComplexValueWithError eval_log_deriv(const StripPoint& p, double tol,
                                     const EvalLimits& lim) {
    check_domain(p, tol, lim);
    if (std::hypot(p.sigma - 1.0, p.t) < 10.0 * tol)
        throw NearSingularity(
            "log-derivative: point within 10*tol of s = 1, a pole of the "
            "quotient");
    const double den_floor = std::sqrt(tol);
    // |q - qhat| <= (e1 + |qhat| e0) / (|zhat| - e0) for |z - zhat| <= e0,
    // |z' - zhat'| <= e1. Start the inner tolerance a factor 8 below and
    // tighten if the denominator amplifies more than that.
    double tol_i = tol / 8.0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::complex<double> value[3];
        double err[3] = {0, 0, 0};
        run_lanes(p, tol_i, 1, value, err);
        const double den = std::abs(value[0]);
        if (den < den_floor)
            throw NearSingularity(
                "log-derivative: |zeta| below sqrt(tol), quotient cannot be "
                "certified");
        if (err[0] >= 0.5 * den) {
            tol_i *= 0.0625;
            continue;
        }
        const std::complex<double> q = value[1] / value[0];
        const double err_q =
            (err[1] + std::abs(q) * err[0]) / (den - err[0]);
        if (err_q <= tol) return {q, err_q};
        tol_i = std::max(tol_i * (tol / err_q) * 0.25, 1e-24);
    }
    throw ToleranceUnreachable(
        "log-derivative: inner evaluations could not be tightened enough for "
        "the requested tolerance");
}

std::complex<double> landau_approx(const StripPoint& p,
                                   const ZeroTable& zeta_zeros) {
    if (p.t < 10.0)
        throw std::invalid_argument("landau_approx: requires t >= 10");
    if (zeta_zeros.function != "zeta")
        throw std::invalid_argument(
            "landau_approx: expected a zeta zero table");
    if (zeta_zeros.t_lo > p.t - 1.0 || zeta_zeros.t_hi < p.t + 1.0)
        throw InsufficientCoverage(
            "landau_approx: zero table does not span [t-1, t+1]");
    const std::complex<double> s(p.sigma, p.t);
    std::complex<double> sum = 0;
    for (const auto& r : zeta_zeros.records) {
        if (std::abs(p.t - r.gamma) > 1.0) continue;
        sum += 1.0 / (s - std::complex<double>(r.beta, r.gamma));
    }
    return sum;
}

} // namespace zetaprime
