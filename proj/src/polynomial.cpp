// SPDX-License-Identifier: Apache-2.0

#include "zetaprime/polynomial.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "zetaprime/errors.hpp"

namespace zetaprime {

cd poly_eval(const std::vector<cd>& coeffs, cd z) {
    cd acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

std::vector<cd> poly_derivative(const std::vector<cd>& coeffs) {
    if (coeffs.size() <= 1) return {};
    std::vector<cd> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d[k - 1] = double(k) * coeffs[k];
    return d;
}

std::vector<cd> poly_from_roots(const std::vector<cd>& roots) {
    // Multiply the factors in Leja order (each next root maximizes the
    // product of distances to those already used). With clustered roots,
    // e.g. points packed on an arc of the unit circle, the naive sorted
    // order inflates intermediate coefficients by 2^(n/2) and the final
    // subtractions cancel catastrophically; Leja order keeps the partial
    // products balanced.
    std::vector<cd> ordered = roots;
    const std::size_t n = ordered.size();
    if (n > 2) {
        std::vector<double> dist(n, 0.0);
        std::size_t pick = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (std::abs(ordered[k]) > std::abs(ordered[pick])) pick = k;
        std::swap(ordered[0], ordered[pick]);
        for (std::size_t step = 1; step + 1 < n; ++step) {
            const cd last = ordered[step - 1];
            pick = step;
            for (std::size_t k = step; k < n; ++k) {
                dist[k] += std::log(std::max(std::abs(ordered[k] - last),
                                             1e-300));
                if (dist[k] > dist[pick]) pick = k;
            }
            std::swap(ordered[step], ordered[pick]);
            std::swap(dist[step], dist[pick]);
        }
    }
    std::vector<cd> c{1.0};
    for (cd r : ordered) {
        c.push_back(c.back());
        for (std::size_t k = c.size() - 2; k >= 1; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] *= -r;
    }
    return c;
}

std::vector<cd> poly_roots(const std::vector<cd>& coeffs) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && std::abs(coeffs[deg - 1]) == 0.0) --deg;
    if (deg == 0)
        throw std::invalid_argument("poly_roots: zero polynomial");
    --deg;
    if (deg == 0) return {};
    std::vector<cd> c(coeffs.begin(), coeffs.begin() + deg + 1);
    const std::vector<cd> dc = poly_derivative(c);

    // Cauchy bound: every root has modulus below 1 + max |c_k / c_deg|.
    double bound = 0.0;
    for (std::size_t k = 0; k < deg; ++k)
        bound = std::max(bound, std::abs(c[k] / c[deg]));
    bound += 1.0;

    // Starting guesses on a circle slightly inside the unit circle, with an
    // irrational angle offset so no guess lands on a symmetry axis. The main
    // callers have roots on or near the unit circle.
    std::vector<cd> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        const double ang = 2.0 * 3.14159265358979324 *
                               (double(k) / double(deg)) +
                           0.7390851332151607;
        z[k] = 0.95 * cd(std::cos(ang), std::sin(ang));
    }

    std::vector<int> resets(deg, 0);
    const int max_iter = 600;
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0;
        for (std::size_t k = 0; k < deg; ++k) {
            const cd p = poly_eval(c, z[k]);
            const cd dp = poly_eval(dc, z[k]);
            cd ratio;
            if (std::abs(dp) == 0.0) {
                // sitting on a critical point; nudge off it
                ratio = cd(1e-8, 1e-8);
            } else {
                ratio = p / dp;
            }
            cd sum = 0;
            for (std::size_t j = 0; j < deg; ++j) {
                if (j == k) continue;
                const cd diff = z[k] - z[j];
                if (std::abs(diff) < 1e-300) continue;
                sum += 1.0 / diff;
            }
            const cd denom = 1.0 - ratio * sum;
            cd w = std::abs(denom) < 1e-300 ? ratio : ratio / denom;
            // A near-singular correction denominator can fling the iterate
            // far out; at degree ~250 one such step overflows poly_eval and
            // the NaN poisons every later sweep. Cap the step, and restart
            // any iterate that still escapes.
            const double wa = std::abs(w);
            const double cap = 0.5 * (1.0 + std::abs(z[k]));
            if (!(wa <= cap)) w = std::isfinite(wa) ? w * (cap / wa) : cd(cap);
            z[k] -= w;
            if (!std::isfinite(z[k].real()) || !std::isfinite(z[k].imag()) ||
                std::abs(z[k]) > 2.0 * bound) {
                ++resets[k];
                const double ang = 2.0 * 3.14159265358979324 *
                                       (double(k) / double(deg)) +
                                   0.7390851332151607 + 0.41 * resets[k];
                z[k] = (0.95 + 0.013 * resets[k]) *
                       cd(std::cos(ang), std::sin(ang));
                worst = std::max(worst, 1.0);
                continue;
            }
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[k])));
        }
        if (worst <= 4e-14) return z;
    }
    throw RootVerificationFailure(
        "poly_roots: Aberth iteration did not converge");
}

std::vector<cd> poly_roots_companion(const std::vector<cd>& coeffs) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && std::abs(coeffs[deg - 1]) == 0.0) --deg;
    if (deg == 0)
        throw std::invalid_argument("poly_roots_companion: zero polynomial");
    --deg;
    if (deg == 0) return {};
    const cd lead = coeffs[deg];
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    for (std::size_t k = 0; k + 1 < deg; ++k) C(k + 1, k) = 1.0;
    for (std::size_t k = 0; k < deg; ++k) C(k, deg - 1) = -coeffs[k] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    if (es.info() != Eigen::Success)
        throw RootVerificationFailure(
            "poly_roots_companion: eigensolver failed");
    std::vector<cd> out(deg);
    for (std::size_t k = 0; k < deg; ++k) out[k] = es.eigenvalues()(k);
    return out;
}

} // namespace zetaprime
