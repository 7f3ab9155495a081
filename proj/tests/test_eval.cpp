// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zetaprime/errors.hpp"
#include "zetaprime/eval.hpp"
#include "zetaprime/zero_table.hpp"

using namespace zetaprime;

namespace {
std::complex<double> at(double sigma, double t, double tol = 1e-10) {
    return eval_zeta({sigma, t}, tol).value;
}
} // namespace

TEST_CASE("classical anchor values to 1e-12") {
    CHECK(std::abs(at(0.0, 0.0, 1e-13) - std::complex<double>(-0.5, 0)) <
          1e-12);
    const double pi = 3.14159265358979323846;
    CHECK(std::abs(at(2.0, 0.0, 1e-13) -
                   std::complex<double>(pi * pi / 6.0, 0)) < 1e-12);
    CHECK(std::abs(eval_zeta_prime({0.0, 0.0}, 1e-13).value -
                   std::complex<double>(-0.5 * std::log(2.0 * pi), 0)) <
          1e-12);
}

TEST_CASE("zeta'(2) against the direct Dirichlet sum") {
    static const auto ref = oracle::zeta_prime_at_two();
    const auto got = eval_zeta_prime({2.0, 0.0}, 1e-12);
    CHECK(std::abs(got.value - ref.value) <= got.abs_error + ref.bound);
    // and against the literature-grade digits the sum converges to
    CHECK(got.value.real() == doctest::Approx(-0.93754825431584).epsilon(1e-11));
    CHECK(got.value.imag() == 0.0);
}

TEST_CASE("zeta'/zeta(2) against the prime-power sum") {
    static const auto ref = oracle::log_deriv_at_two();
    const auto got = eval_log_deriv({2.0, 0.0}, 1e-12);
    CHECK(std::abs(got.value - ref.value) <= got.abs_error + ref.bound);
}

TEST_CASE("second derivative is consistent with differenced first") {
    const double h = 1e-4;
    const auto hi = eval_zeta_prime({0.75 + h, 3.0}, 1e-12).value;
    const auto lo = eval_zeta_prime({0.75 - h, 3.0}, 1e-12).value;
    const auto snd = eval_zeta_second({0.75, 3.0}, 1e-10).value;
    CHECK(std::abs((hi - lo) / (2.0 * h) - snd) < 1e-6);
}

TEST_CASE("combined derivative pass is consistent with the single calls") {
    ComplexValueWithError out[3];
    eval_zeta_derivatives({0.8, 21.5}, 1e-10, 2, out);
    // the single-value entry points are wrappers over the order they ask
    // for, so at equal order the result is the identical computation
    const auto z2 = eval_zeta_second({0.8, 21.5}, 1e-10);
    CHECK(std::abs(out[2].value - z2.value) == 0.0);
    CHECK(out[2].abs_error == z2.abs_error);
    // lower orders run a shorter series on their own, so they may differ
    // within the certified errors but not beyond
    const auto z0 = eval_zeta({0.8, 21.5}, 1e-10);
    const auto z1 = eval_zeta_prime({0.8, 21.5}, 1e-10);
    CHECK(std::abs(out[0].value - z0.value) <= out[0].abs_error + z0.abs_error);
    CHECK(std::abs(out[1].value - z1.value) <= out[1].abs_error + z1.abs_error);
}

TEST_CASE("dual-method agreement at random strip points") {
    std::mt19937_64 g(20260101);
    std::uniform_real_distribution<double> us(-0.9, 3.9), ut(0.1, 80.0);
    int tested = 0;
    double worst = 0;
    while (tested < 120) {
        const double sigma = us(g), t = ut(g);
        const std::complex<double> s(sigma, t);
        if (std::abs(s - 1.0) < 0.05 || std::abs(s) < 0.02) continue;
        const auto mine = eval_zeta({sigma, t}, 1e-10);
        const auto ref = oracle::zeta(s);
        const double gap = std::abs(mine.value - ref.value);
        const double budget = mine.abs_error + ref.bound;
        CHECK(gap <= budget);
        worst = std::max(worst, gap / std::max(budget, 1e-300));
        ++tested;
    }
    CHECK(worst <= 1.0);
}

TEST_CASE("conjugate symmetry of zeta, zeta' and the quotient") {
    for (auto [sigma, t] : {std::pair{0.75, 31.7}, {1.5, 8.3}, {-0.4, 12.9},
                            {2.5, 64.2}}) {
        const auto a0 = eval_zeta({sigma, t}, 1e-11).value;
        const auto b0 = eval_zeta({sigma, -t}, 1e-11).value;
        CHECK(std::abs(b0 - std::conj(a0)) < 1e-11 * (1.0 + std::abs(a0)));
        const auto a1 = eval_zeta_prime({sigma, t}, 1e-11).value;
        const auto b1 = eval_zeta_prime({sigma, -t}, 1e-11).value;
        CHECK(std::abs(b1 - std::conj(a1)) < 1e-11 * (1.0 + std::abs(a1)));
        const auto a2 = eval_log_deriv({sigma, t}, 1e-9).value;
        const auto b2 = eval_log_deriv({sigma, -t}, 1e-9).value;
        CHECK(std::abs(b2 - std::conj(a2)) < 1e-8 * (1.0 + std::abs(a2)));
    }
}

TEST_CASE("typed failures: pole, impossible tolerance, near-zero quotient") {
    CHECK_THROWS_AS(eval_zeta({1.0 + 1e-12, 0.0}, 1e-9), PoleProximity);
    CHECK_THROWS_AS(eval_zeta({0.75, 20.0}, 1e-30), ToleranceUnreachable);
    // first ordinate of zeta on the critical line; the quotient cannot be
    // certified there
    CHECK_THROWS_AS(eval_log_deriv({0.5, 14.134725141734695}, 1e-6),
                    NearSingularity);
}

TEST_CASE("the quotient tracks its simple pole at s = 1") {
    // zeta'/zeta = -1/(s-1) + gamma + O(s-1); at 1e-7 to the left of the
    // pole the value is large but certified, not an error
    const auto q = eval_log_deriv({0.9999999, 0.0}, 1e-9);
    CHECK(q.value.real() == doctest::Approx(1e7).epsilon(1e-4));
    CHECK(std::abs(q.value.imag()) < 1e-3);
    CHECK(std::abs(q.value - std::complex<double>(1e7 + 0.5772156649, 0.0)) <
          1e-3 * 1e7);
}

TEST_CASE("evaluations outside the declared strip are rejected") {
    CHECK_THROWS(eval_zeta({5.1, 2.0}, 1e-9));
    CHECK_THROWS(eval_zeta({0.75, 6000.0}, 1e-9));
}

namespace {
ZeroTable synthetic_zeta_table() {
    ZeroTable tab;
    tab.function = "zeta";
    tab.t_lo = 0.0;
    tab.t_hi = 200.0;
    tab.eval_tol = 1e-9;
    tab.refine_tol = 1e-10;
    ZeroRecord r;
    r.beta = 0.5;
    r.gamma = 50.0;
    r.residual = 0;
    r.newton_error = 0;
    r.multiplicity = 1;
    tab.records.push_back(r);
    return tab;
}
} // namespace

TEST_CASE("landau partial fraction: empty window and single zero") {
    const ZeroTable tab = synthetic_zeta_table();
    // nothing within distance 1 of t = 100
    CHECK(std::abs(landau_approx({2.0, 100.0}, tab)) == 0.0);
    // ... so the bound |zeta'/zeta| <= C log t must carry the whole value
    const auto q = eval_log_deriv({2.0, 100.0}, 1e-9);
    CHECK(std::abs(q.value) <= 4.0 * std::log(100.0));

    // one zero at vertical distance d: the sum is exactly 1/(s - rho)
    const std::complex<double> s(0.75, 50.25);
    const std::complex<double> rho(0.5, 50.0);
    CHECK(std::abs(landau_approx({0.75, 50.25}, tab) - 1.0 / (s - rho)) <
          1e-15);
    CHECK(std::abs(landau_approx({0.75, 50.25}, tab)) ==
          doctest::Approx(1.0 / std::abs(s - rho)));
}

TEST_CASE("landau preconditions") {
    const ZeroTable tab = synthetic_zeta_table();
    CHECK_THROWS_AS(landau_approx({0.75, 5.0}, tab), std::invalid_argument);
    CHECK_THROWS_AS(landau_approx({0.75, 199.5}, tab), InsufficientCoverage);
    ZeroTable wrong = tab;
    wrong.function = "zeta_prime";
    CHECK_THROWS_AS(landau_approx({0.75, 100.0}, wrong),
                    std::invalid_argument);
}
