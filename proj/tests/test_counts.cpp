// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "zetaprime/counts.hpp"
#include "zetaprime/errors.hpp"
#include "zetaprime/eval.hpp"
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

ZeroTable toy_table() {
    ZeroTable tab;
    tab.function = "zeta_prime";
    tab.t_lo = 0.0;
    tab.t_hi = 20.0;
    tab.eval_tol = 1e-9;
    tab.refine_tol = 1e-10;
    ZeroRecord a;
    a.beta = 0.8;
    a.gamma = 5.0;
    a.multiplicity = 1;
    ZeroRecord b;
    b.beta = 0.9;
    b.gamma = 10.0;
    b.multiplicity = 1;
    tab.records = {a, b};
    return tab;
}
} // namespace

TEST_CASE("smooth main term of the zero count") {
    // (T/2pi) log(T/2pi) - (1 + log 2)(T/2pi)
    const double T = 1000.0;
    const double u = T / (2.0 * 3.14159265358979323846);
    CHECK(nprime_main_term(T) ==
          doctest::Approx(u * std::log(u) - (1.0 + std::log(2.0)) * u)
              .epsilon(1e-15));
    CHECK(nprime_main_term(1000.0) == doctest::Approx(537.46).epsilon(1e-3));
    CHECK(nprime_main_term(200.0) > nprime_main_term(100.0));
}

TEST_CASE("observed count of zeta' zeros tracks the main term") {
    const CountReport r = count_nprime(100.0, zp_table());
    CHECK(r.observed == 19);
    CHECK(r.tolerance_band == doctest::Approx(3.0 * std::log(100.0)));
    CHECK(std::fabs(r.residual) <= r.tolerance_band);
    CHECK(r.residual == doctest::Approx(double(r.observed) - r.predicted));

    CHECK_THROWS_AS(count_nprime(200.0, zp_table()), InsufficientCoverage);
}

TEST_CASE("sigma-restricted count against the 1/(sigma - 1/2) prediction") {
    const CountReport r = count_nprime_sigma(0.75, 100.0, zp_table());
    CHECK(r.predicted ==
          doctest::Approx(100.0 / (2.0 * 3.14159265358979323846 * 0.25)));
    CHECK(r.observed >= 0);
    CHECK(r.observed <= long(zp_table().records.size()));
    // the asymptotic window is empty at desk-scale heights
    CHECK_FALSE(r.in_stated_range);
    CHECK(r.tolerance_band > 0);
}

TEST_CASE("piecewise error factor: branch continuity at the crossover") {
    const double T = 1000.0;
    const double logT = std::log(T), L2 = std::log(logT);
    const double psi_star =
        std::pow(L2, 4.0 / 17.0) * std::pow(logT, 14.0 / 17.0);
    const ErrorTermE below = error_term_E(psi_star * (1.0 - 1e-9), T);
    const ErrorTermE above = error_term_E(psi_star * (1.0 + 1e-9), T);
    CHECK(below.regime == ErrorTermE::Regime::low);
    CHECK(above.regime == ErrorTermE::Regime::high);
    CHECK(std::fabs(below.value - above.value) < 1e-6 * below.value);
    // spot values of each branch
    const ErrorTermE low = error_term_E(2.0, T);
    CHECK(low.value ==
          doctest::Approx(std::pow(L2, 3) * std::pow(logT, 1.5) /
                          std::pow(2.0, 2.25)));
    const ErrorTermE high = error_term_E(8.0, T);
    CHECK(high.value ==
          doctest::Approx(L2 * L2 * 64.0 / (logT * logT)));
}

TEST_CASE("weighted zero sum: direct and integrated forms coincide") {
    const ZeroTable toy = toy_table();
    const WeightedSumL w = weighted_sum_L(0.6, 20.0, toy);
    CHECK(w.direct == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::fabs(w.direct - w.integrated) <=
          1e-12 * std::max(1.0, std::fabs(w.direct)));

    const WeightedSumL real = weighted_sum_L(0.75, 100.0, zp_table());
    CHECK(real.direct > 0);
    CHECK(std::fabs(real.direct - real.integrated) <=
          1e-12 * std::max(1.0, std::fabs(real.direct)));
}

TEST_CASE("sandwich bracketing holds in snapped-exact arithmetic") {
    const ZeroTable toy = toy_table();
    const SandwichReport s = sandwich_check(0.7, 0.05, 20.0, toy);
    CHECK(s.holds);
    CHECK(s.observed == 2);
    CHECK(s.lower <= double(s.observed) + 1e-9);
    CHECK(double(s.observed) <= s.upper + 1e-9);

    for (double sigma : {0.65, 0.75, 0.85}) {
        const SandwichReport r =
            sandwich_check(sigma, (2.0 * sigma - 1.0) / 8.0, 100.0,
                           zp_table());
        CHECK(r.holds);
    }

    CHECK_THROWS_AS(sandwich_check(0.7, 0.12, 20.0, toy),
                    std::invalid_argument);
    CHECK_THROWS_AS(sandwich_check(0.7, 0.0, 20.0, toy),
                    std::invalid_argument);
}

TEST_CASE("density bound report and unit-interval growth") {
    const CountReport s = selberg_density_check(0.6, 100.0, z_table());
    CHECK(s.observed == 0); // every located zeta zero sits on the line
    CHECK(s.predicted > 0);

    CHECK(max_unit_interval_ratio(100.0, zp_table()) <= kUnitIntervalBandC);
    CHECK(max_unit_interval_ratio(100.0, z_table()) <= kUnitIntervalBandC);
}

TEST_CASE("partial-fraction consistency band against the real zero table") {
    // t = 100 falls in an ordinate gap (98.83 and 101.32 are both farther
    // than 1), so the sum is empty there
    const std::complex<double> lhs = eval_log_deriv({0.75, 100.0}, 1e-9).value;
    const std::complex<double> rhs = landau_approx({0.75, 100.0}, z_table());
    CHECK(std::abs(rhs) == 0.0);
    CHECK(std::abs(lhs - rhs) <= 4.0 * std::log(100.0));

    // t = 49.5 sees the zero at 49.7738...; the window sum is nonempty and
    // the band must still absorb the difference
    const std::complex<double> lhs2 =
        eval_log_deriv({0.75, 49.5}, 1e-9).value;
    const std::complex<double> rhs2 = landau_approx({0.75, 49.5}, z_table());
    CHECK(std::abs(rhs2) > 1.0);
    CHECK(std::abs(lhs2 - rhs2) <= 4.0 * std::log(49.5));
}
