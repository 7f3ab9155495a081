// SPDX-License-Identifier: Apache-2.0
#include "zetaprime/quadrature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace zetaprime {

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1 || n > 256)
        throw std::invalid_argument("gauss_legendre: order out of range");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double off = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = off;
        J(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw NumericsError("gauss_legendre: Jacobi eigensolve failed");
    GaussLegendre rule;
    rule.nodes = es.eigenvalues();
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double q = es.eigenvectors()(0, i);
        rule.weights[i] = 2.0 * q * q;
    }
    // the spectrum is symmetric about 0; enforce it exactly
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return cache.emplace(n, std::move(rule)).first->second;
}

double log_kernel_integral(double d, double u0, double u1) {
    const double ad = std::abs(d);
    auto F = [ad](double u) {
        if (u == 0.0) return 0.0;
        double v = u * 0.5 * std::log(ad * ad + u * u) - u;
        if (ad > 0.0) v += ad * std::atan(u / ad);
        return v;
    };
    return F(u1) - F(u0);
}

double log_sq_kernel_half(double h) {
    if (!(h >= 0)) throw std::invalid_argument("log_sq_kernel_half: h < 0");
    if (h == 0.0) return 0.0;
    const double l = std::log(h);
    return h * (l * l - 2.0 * l + 2.0);
}

} // namespace zetaprime
