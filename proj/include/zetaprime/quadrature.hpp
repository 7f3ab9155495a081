// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zetaprime/errors.hpp"

namespace zetaprime {

struct GaussLegendre {
    Eigen::VectorXd nodes;   // ascending on (-1, 1)
    Eigen::VectorXd weights; // positive, summing to 2
};

// Golub-Welsch: eigendecomposition of the symmetric Jacobi matrix with
// off-diagonals k / sqrt(4k^2 - 1); weights are 2 * (first eigenvector
// component)^2. Results are cached per order.
const GaussLegendre& gauss_legendre(int n);

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    int evaluations = 0;
};

namespace detail {

template <class F>
double gl_panel(F& f, const GaussLegendre& rule, double a, double b,
                int& evals) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    double acc = 0;
    for (int i = 0; i < rule.nodes.size(); ++i) {
        double v = f(c + r * rule.nodes[i]);
        if (!std::isfinite(v))
            throw NumericsError("quadrature: integrand returned a non-finite "
                                "value");
        acc += rule.weights[i] * v;
        ++evals;
    }
    return r * acc;
}

} // namespace detail

// Adaptive bisection with a fixed Gauss-Legendre rule per panel. A panel is
// accepted when its two halves reproduce it within the tolerance share
// proportional to its length. Tolerance is absolute.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double tol,
                                    int rule_order = 16, int max_depth = 48) {
    if (!(tol > 0)) throw std::invalid_argument("quadrature: tol must be > 0");
    const GaussLegendre& rule = gauss_legendre(rule_order);
    QuadratureResult out;
    if (a == b) return out;
    const double total_len = std::abs(b - a);
    struct Panel {
        double a, b, coarse;
        int depth;
    };
    std::vector<Panel> stack;
    stack.push_back({a, b, detail::gl_panel(f, rule, a, b, out.evaluations), 0});
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const double left = detail::gl_panel(f, rule, p.a, m, out.evaluations);
        const double right = detail::gl_panel(f, rule, m, p.b, out.evaluations);
        const double diff = std::abs(left + right - p.coarse);
        const double share = tol * std::abs(p.b - p.a) / total_len;
        if (diff <= share || p.depth >= max_depth) {
            if (p.depth >= max_depth && diff > share)
                throw ToleranceUnreachable(
                    "quadrature: bisection depth cap reached before the panel "
                    "converged");
            out.value += left + right;
            out.error_estimate += diff;
        } else {
            stack.push_back({p.a, m, left, p.depth + 1});
            stack.push_back({m, p.b, right, p.depth + 1});
        }
    }
    return out;
}

// tanh-sinh (double exponential) rule on [a, b] for integrands with
// integrable log-power endpoint singularities. Halves the mesh until two
// successive levels agree within tol. Nodes whose mapped abscissa rounds
// onto an endpoint are dropped; their weights are below 1e-14, harmless for
// singularities up to log powers but disqualifying for algebraic ones.
template <class F>
QuadratureResult integrate_tanh_sinh(F&& f, double a, double b, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("quadrature: tol must be > 0");
    QuadratureResult out;
    if (a == b) return out;
    const double lo = std::min(a, b), hi = std::max(a, b);
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    constexpr double kUMax = 4.6; // node gap to endpoint ~1e-68, weight likewise
    constexpr int kMaxLevel = 12;
    const double half_pi = 1.5707963267948966;
    auto node_sum = [&](double h, bool odd_only) {
        double acc = 0;
        const int step = odd_only ? 2 : 1;
        const int k0 = odd_only ? 1 : 0;
        for (int k = k0;; k += step) {
            const double u = k * h;
            if (u > kUMax) break;
            const double w = half_pi * std::sinh(u);
            const double ch = std::cosh(w);
            const double weight = half_pi * std::cosh(u) / (ch * ch);
            const double xi = std::tanh(w);
            double v = 0;
            const double xp = c + r * xi;
            if (xp > lo && xp < hi) {
                v += f(xp);
                ++out.evaluations;
            }
            if (k > 0) {
                const double xm = c - r * xi;
                if (xm > lo && xm < hi) {
                    v += f(xm);
                    ++out.evaluations;
                }
            }
            if (!std::isfinite(v))
                throw NumericsError(
                    "quadrature: integrand returned a non-finite value");
            acc += weight * v;
        }
        return acc;
    };
    double h = 1.0;
    double sum = node_sum(h, false);
    double prev = r * h * sum;
    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        sum += node_sum(h, true);
        const double cur = r * h * sum;
        const double diff = std::abs(cur - prev);
        if (level >= 2 && diff <= tol) {
            out.value = cur;
            out.error_estimate = diff;
            return out;
        }
        prev = cur;
    }
    throw ToleranceUnreachable(
        "quadrature: tanh-sinh level cap reached before convergence");
}

// int_{u0}^{u1} (1/2) log(d^2 + u^2) du, the moment of log distance against
// a point at height d. Antiderivative u/2 log(d^2+u^2) - u + d atan(u/d),
// valid down to d = 0 where it degenerates to u log|u| - u.
double log_kernel_integral(double d, double u0, double u1);

// int_0^h log(u)^2 du = h (log^2 h - 2 log h + 2)
double log_sq_kernel_half(double h);

} // namespace zetaprime
