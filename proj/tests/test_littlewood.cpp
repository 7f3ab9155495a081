// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "zetaprime/counts.hpp"
#include "zetaprime/eval.hpp"
#include "zetaprime/littlewood.hpp"
#include "zetaprime/quadrature.hpp"
#include "zetaprime/zero_finder.hpp"

using namespace zetaprime;

namespace {
const ZeroTable& zp_table() {
    static const ZeroTable t =
        cached_zeros_up_to(TargetFunction::zeta_prime, 110.0, "unit_cache");
    return t;
}
const ZeroTable& z_table() {
    static const ZeroTable t =
        cached_zeros_up_to(TargetFunction::zeta, 110.0, "unit_cache");
    return t;
}
} // namespace

TEST_CASE("log|zeta| integral far from all singularities") {
    // at sigma = 2 nothing is within 0.25 of the line, so the result must
    // match a plain quadrature of the same integrand
    const IntegralResult r =
        integrate_log_abs(LogIntegrand::zeta, 2.0, 40.0, 1e-9, &z_table(),
                          nullptr);
    CHECK(r.singular_ordinates.empty());
    CHECK_FALSE(r.zero_on_line);
    const auto ref = integrate_adaptive(
        [](double t) {
            return std::log(std::abs(eval_zeta({2.0, t}, 1e-12).value));
        },
        kIntegralStart, 40.0, 1e-9);
    CHECK(std::fabs(r.value - ref.value) < 1e-7);
}

TEST_CASE("the quotient integral is the difference of the two logs") {
    const double sigma = 0.75, T = 60.0, tol = 1e-8;
    const IntegralResult q = integrate_log_abs(
        LogIntegrand::log_deriv, sigma, T, tol, &z_table(), &zp_table());
    const IntegralResult num = integrate_log_abs(
        LogIntegrand::zeta_prime, sigma, T, tol, &z_table(), &zp_table());
    const IntegralResult den = integrate_log_abs(
        LogIntegrand::zeta, sigma, T, tol, &z_table(), &zp_table());
    CHECK(std::fabs(q.value - (num.value - den.value)) <
          100.0 * (q.quad_error + num.quad_error + den.quad_error) + 1e-6);
    // the line at sigma = 0.75 passes within 0.25 of every zeta ordinate
    CHECK(den.singular_ordinates.size() >= 13);
}

TEST_CASE("coverage prerequisites are enforced") {
    CHECK_THROWS_AS(integrate_log_abs(LogIntegrand::zeta, 0.75, 200.0, 1e-8,
                                      &z_table(), nullptr),
                    InsufficientCoverage);
    CHECK_THROWS_AS(littlewood_residual_zeta_prime(0.75, 200.0, 1e-8,
                                                   zp_table()),
                    InsufficientCoverage);
}

TEST_CASE("zero-sum identity for zeta' stays inside its band") {
    for (double sigma : {0.75, 1.0, 1.5}) {
        const LittlewoodReport r =
            littlewood_residual_zeta_prime(sigma, 100.0, 1e-8, zp_table());
        CHECK(r.band == doctest::Approx(kLittlewoodBandC * std::log(100.0)));
        CHECK(std::fabs(r.residual) <= r.band);
        CHECK(r.residual ==
              doctest::Approx(r.zero_sum - r.integral - r.main_term));
    }
}

TEST_CASE("zero-sum identity for zeta stays inside its band") {
    for (double sigma : {0.75, 1.5}) {
        const LittlewoodReport r =
            littlewood_residual_zeta(sigma, 60.0, 1e-8, z_table());
        // no zeta zero right of sigma >= 0.75 at desk scale: the sum is 0
        CHECK(r.zero_sum == 0.0);
        CHECK(std::fabs(r.residual) <= r.band);
    }
}

TEST_CASE("main asymptotic comparison at desk scale") {
    const TheoremReport r =
        theorem_main_comparison(0.75, 100.0, 1e-8, z_table(), zp_table());
    CHECK(r.rhs == doctest::Approx(100.0 * std::log(2.0) -
                                   0.5 * kEulerGamma * 100.0));
    CHECK(r.residual == doctest::Approx(r.lhs - r.rhs));
    CHECK(r.residual_over_T == doctest::Approx(r.residual / 100.0));
    CHECK(r.E_value > 0);
    // T = 100 sits far below the theorem's validity window
    CHECK_FALSE(r.in_stated_range);
    // desk-scale sanity: the mismatch per unit height is dwarfed by E
    CHECK(std::fabs(r.residual_over_T) <= std::sqrt(r.E_value));
}

TEST_CASE("weighted-sum asymptotic comparison at desk scale") {
    const TheoremReport r = theorem1_comparison(0.75, 100.0, zp_table());
    const double expect_rhs =
        100.0 * std::log(2.0) +
        (std::log(std::pow(2.0, 0.75) / std::log(2.0)) -
         0.5 * kEulerGamma) *
            100.0;
    CHECK(r.rhs == doctest::Approx(expect_rhs));
    CHECK(r.lhs > 0);
    CHECK_FALSE(r.in_stated_range);
    CHECK(std::fabs(r.residual_over_T) <= std::sqrt(r.E_value));
}

TEST_CASE("consistency of the two theorem forms through the zeta identity") {
    // lhs(theorem1) - lhs(main) should equal the zeta-prime Littlewood
    // integral piece plus the zeta integral, up to quadrature error and the
    // O(log T) slack absorbed by both identities
    const double T = 60.0;
    const TheoremReport main_r =
        theorem_main_comparison(0.75, T, 1e-8, z_table(), zp_table());
    const TheoremReport one_r = theorem1_comparison(0.75, T, zp_table());
    CHECK(std::fabs((one_r.lhs - one_r.rhs) - (main_r.lhs - main_r.rhs)) <=
          2.0 * kLittlewoodBandC * std::log(T));
}
